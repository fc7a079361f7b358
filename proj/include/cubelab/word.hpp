#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubelab {

// A reduced word in the free group F_k. Letters are (generator, exponent)
// with 1-based generators and exponents +1/-1; no letter is followed by its
// inverse. Words are reduced on construction and under multiplication, so
// equality of reduced forms is equality in F_k.
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter&) const = default;
};

struct Word {
  int k = 0;  // ambient number of generators
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(int rank) : k(rank) {}
  Word(int rank, std::vector<Letter> ls);

  bool is_identity() const { return letters.empty(); }
  size_t length() const { return letters.size(); }
  bool operator==(const Word&) const = default;
};

Word reduce(int k, const std::vector<Letter>& letters);
Word word_mul(const Word& a, const Word& b);
Word word_inv(const Word& a);
Word generator(int k, int i);

// The fundamental cube value tau_k(v) = prod g_i^{v_i}.
Word tau_word(int k, uint32_t v);

std::string word_to_string(const Word& w);

}  // namespace cubelab
