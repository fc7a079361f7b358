#include "cubelab/affine.hpp"

#include <stdexcept>

#include "cubelab/vertex.hpp"

namespace cubelab {

int AffineMap::eval(const Word& w) const {
  if (w.k != k) throw std::invalid_argument("affine eval: word rank mismatch");
  int x = base;
  for (const Letter& l : w.letters) {
    int img = gen_images[static_cast<size_t>(l.gen - 1)];
    x = target->op(x, l.exp > 0 ? img : target->invert(img));
  }
  return x;
}

Word FreeAffineMap::eval(const Word& w) const {
  if (w.k != k) throw std::invalid_argument("free affine eval: word rank mismatch");
  Word x = base;
  for (const Letter& l : w.letters) {
    const Word& img = gen_images[static_cast<size_t>(l.gen - 1)];
    x = word_mul(x, l.exp > 0 ? img : word_inv(img));
  }
  return x;
}

AffineMap affine_from_star(const GroupTable& target, int value_at_one,
                           const std::vector<int>& values_at_gens) {
  AffineMap f;
  f.target = &target;
  f.k = static_cast<int>(values_at_gens.size());
  f.base = value_at_one;
  for (int v : values_at_gens) f.gen_images.push_back(target.op(target.invert(value_at_one), v));
  return f;
}

FreeAffineMap free_affine_from_star(int m, const Word& value_at_one,
                                    const std::vector<Word>& values_at_gens) {
  FreeAffineMap f;
  f.k = static_cast<int>(values_at_gens.size());
  f.m = m;
  f.base = value_at_one;
  for (const Word& v : values_at_gens) f.gen_images.push_back(word_mul(word_inv(value_at_one), v));
  return f;
}

bool is_affine(const GroupTable& g1, const GroupTable& g2, const std::vector<int>& f) {
  if (f.size() != static_cast<size_t>(g1.order)) throw std::invalid_argument("is_affine: table size mismatch");
  auto fv = [&](int x) { return f[static_cast<size_t>(x)]; };

  // Quadruple test: d is determined by (a,b,c) via d = ab^{-1}c.
  bool quad = true;
  for (int a = 0; a < g1.order && quad; ++a)
    for (int b = 0; b < g1.order && quad; ++b)
      for (int c = 0; c < g1.order && quad; ++c) {
        int d = g1.op(g1.op(a, g1.invert(b)), c);
        int lhs = g2.op(g2.op(fv(a), g2.invert(fv(b))), g2.op(fv(c), g2.invert(fv(d))));
        if (lhs != g2.id) quad = false;
      }

  // Homomorphism test for m(x) = f(1)^{-1} f(x).
  bool hom = true;
  const int f1inv = g2.invert(fv(g1.id));
  auto m = [&](int x) { return g2.op(f1inv, fv(x)); };
  for (int x = 0; x < g1.order && hom; ++x)
    for (int y = 0; y < g1.order && hom; ++y)
      if (m(g1.op(x, y)) != g2.op(m(x), m(y))) hom = false;

  if (quad != hom) throw std::logic_error("is_affine: quadruple and homomorphism tests disagree");
  return quad;
}

AffineMap lift_affine(const AffineMap& f, const GroupTable& g, const QuotientResult& quot) {
  if (f.target->order != quot.quotient.order)
    throw std::invalid_argument("lift_affine: map does not target the given quotient");
  auto rep = [&](int coset) { return quot.classes[static_cast<size_t>(coset)][0]; };
  std::vector<int> gen_values;
  Word one(f.k);
  for (int i = 1; i <= f.k; ++i) gen_values.push_back(rep(f.eval(generator(f.k, i))));
  return affine_from_star(g, rep(f.eval(one)), gen_values);
}

bool g_morphism_free_test(const VertexMap& phi) {
  if (phi.n > 6 || phi.m > 6) throw std::invalid_argument("g_morphism_free_test: dimensions above 6");
  // Candidate affine F_n -> F_m from the values at 0 and the unit vectors.
  Word at_one = tau_word(phi.m, phi.apply_bits(0));
  std::vector<Word> at_gens;
  for (int i = 1; i <= phi.n; ++i) at_gens.push_back(tau_word(phi.m, phi.apply_bits(1u << (i - 1))));
  FreeAffineMap f = free_affine_from_star(phi.m, at_one, at_gens);
  for (uint32_t v = 0; v < vertex_count(phi.n); ++v)
    if (!(f.eval(tau_word(phi.n, v)) == tau_word(phi.m, phi.apply_bits(v)))) return false;
  return true;
}

bool z_morphism_test(const VertexMap& phi) {
  if (phi.n > 6 || phi.m > 6) throw std::invalid_argument("z_morphism_test: dimensions above 6");
  // Fit phi(v) = vM + b over the integers from the values at 0 and e_i.
  std::vector<int> b(static_cast<size_t>(phi.m));
  for (int j = 1; j <= phi.m; ++j) b[static_cast<size_t>(j - 1)] = coord(phi.apply_bits(0), j);
  std::vector<std::vector<int>> mrows;
  for (int i = 1; i <= phi.n; ++i) {
    std::vector<int> row(static_cast<size_t>(phi.m));
    uint32_t img = phi.apply_bits(1u << (i - 1));
    for (int j = 1; j <= phi.m; ++j) row[static_cast<size_t>(j - 1)] = coord(img, j) - b[static_cast<size_t>(j - 1)];
    mrows.push_back(std::move(row));
  }
  for (uint32_t v = 0; v < vertex_count(phi.n); ++v) {
    for (int j = 1; j <= phi.m; ++j) {
      int val = b[static_cast<size_t>(j - 1)];
      for (int i = 1; i <= phi.n; ++i)
        if (coord(v, i)) val += mrows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      if (val != coord(phi.apply_bits(v), j)) return false;
    }
  }
  return true;
}

}  // namespace cubelab
