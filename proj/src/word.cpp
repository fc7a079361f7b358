#include "cubelab/word.hpp"

#include <stdexcept>

#include "cubelab/vertex.hpp"

namespace cubelab {

Word reduce(int k, const std::vector<Letter>& letters) {
  Word w(k);
  for (const Letter& l : letters) {
    if (l.gen < 1 || l.gen > k) throw std::invalid_argument("word letter generator out of range");
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("word letter exponent must be +-1");
    if (!w.letters.empty() && w.letters.back().gen == l.gen && w.letters.back().exp == -l.exp)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

Word::Word(int rank, std::vector<Letter> ls) { *this = reduce(rank, ls); }

Word word_mul(const Word& a, const Word& b) {
  if (a.k != b.k) throw std::invalid_argument("word_mul: rank mismatch");
  std::vector<Letter> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return reduce(a.k, ls);
}

Word word_inv(const Word& a) {
  Word w(a.k);
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    w.letters.push_back({it->gen, -it->exp});
  return w;
}

Word generator(int k, int i) {
  if (i < 1 || i > k) throw std::invalid_argument("generator index out of range");
  Word w(k);
  w.letters.push_back({i, 1});
  return w;
}

Word tau_word(int k, uint32_t v) {
  Word w(k);
  for (int i = 1; i <= k; ++i)
    if (coord(v, i)) w.letters.push_back({i, 1});
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ".";
    s += "g" + std::to_string(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace cubelab
