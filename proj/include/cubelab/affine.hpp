#pragma once

#include <vector>

#include "cubelab/group.hpp"
#include "cubelab/morphism.hpp"
#include "cubelab/word.hpp"

namespace cubelab {

// An affine morphism F_k -> G in left-base form f(w) = base * m(w), where m
// is the homomorphism sending the i-th generator to gen_images[i-1].
struct AffineMap {
  const GroupTable* target = nullptr;
  int k = 0;
  int base = 0;
  std::vector<int> gen_images;

  int eval(const Word& w) const;
};

// An affine morphism F_k -> F_m, same normal form with word values.
struct FreeAffineMap {
  int k = 0;
  int m = 0;
  Word base;
  std::vector<Word> gen_images;

  Word eval(const Word& w) const;
};

// The unique affine extension of values on F_k^* = {1, g_1, ..., g_k}:
// base = value_at_one, gen_images[i] = value_at_one^{-1} * values_at_gens[i].
AffineMap affine_from_star(const GroupTable& target, int value_at_one,
                           const std::vector<int>& values_at_gens);
FreeAffineMap free_affine_from_star(int m, const Word& value_at_one,
                                    const std::vector<Word>& values_at_gens);

// Whether a function table G1 -> G2 is an affine morphism. Runs both the
// quadruple test (f(a)f(b)^{-1}f(c)f(d)^{-1} = 1 whenever ab^{-1}cd^{-1} = 1)
// and the homomorphism test on x -> f(1)^{-1}f(x); the two must agree.
bool is_affine(const GroupTable& g1, const GroupTable& g2, const std::vector<int>& f);

// A lift of an affine morphism into quot.quotient along the factor map, so
// that projecting the result recovers `f` (lifts always exist).
AffineMap lift_affine(const AffineMap& f, const GroupTable& g, const QuotientResult& quot);

// Free-group test for category G membership of a raw cube map: the map
// tau_n(v) -> tau_m(phi(v)) must extend to an affine morphism F_n -> F_m.
// Requires n, m <= 4.
bool g_morphism_free_test(const VertexMap& phi);

// Integer-affine test for category N membership: phi(v) = vM + b must hold
// for the matrix/vector fitted from phi's values at 0 and the unit vectors.
// Requires n, m <= 4.
bool z_morphism_test(const VertexMap& phi);

}  // namespace cubelab
