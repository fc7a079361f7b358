#include "cubelab/morphism.hpp"

#include <stdexcept>
#include <string>

namespace cubelab {

CubeMorphism::CubeMorphism(int source_dim, int target_dim, std::vector<CoordinateRule> r)
    : n(source_dim), m(target_dim), rules(std::move(r)) {
  vertex_count(n);
  vertex_count(m);
  if (rules.size() != static_cast<size_t>(m))
    throw std::invalid_argument("cube morphism needs exactly m coordinate rules");
  for (const auto& rule : rules) {
    if (rule.is_const()) {
      if (rule.source != 0) throw std::invalid_argument("constant rule must have source 0");
    } else if (rule.source < 1 || rule.source > n) {
      throw std::invalid_argument("rule source coordinate out of range [1,n]");
    }
  }
}

Vertex CubeMorphism::apply(const Vertex& v) const {
  if (v.n != n) throw std::invalid_argument("vertex dimension does not match morphism source");
  return Vertex(m, apply_bits(v.bits));
}

bool CubeMorphism::in_category(Category cat) const {
  if (cat == Category::N) return true;
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (gamma(j) != 0 && gamma(i) > gamma(j)) return false;
  return true;
}

CubeMorphism compose(const CubeMorphism& phi2, const CubeMorphism& phi1) {
  if (phi1.m != phi2.n)
    throw std::invalid_argument("compose: inner target dimension != outer source dimension");
  std::vector<CoordinateRule> rules;
  rules.reserve(static_cast<size_t>(phi2.m));
  for (const auto& outer : phi2.rules) {
    switch (outer.kind) {
      case CoordinateRule::Kind::Const0:
      case CoordinateRule::Kind::Const1:
        rules.push_back(outer);
        break;
      case CoordinateRule::Kind::Coord:
        rules.push_back(phi1.rules[static_cast<size_t>(outer.source - 1)]);
        break;
      case CoordinateRule::Kind::NegCoord:
        rules.push_back(phi1.rules[static_cast<size_t>(outer.source - 1)].negated());
        break;
    }
  }
  return CubeMorphism(phi1.n, phi2.m, std::move(rules));
}

CubeMorphism identity_morphism(int n) {
  std::vector<CoordinateRule> rules;
  for (int i = 1; i <= n; ++i) rules.push_back(CoordinateRule::coord(i));
  return CubeMorphism(n, n, std::move(rules));
}

CubeMorphism face_embedding(int n, int i, int j) {
  if (n < 1 || i < 1 || i > n || (j != 0 && j != 1))
    throw std::invalid_argument("face_embedding: need n>=1, i in [n], j in {0,1}");
  std::vector<CoordinateRule> rules;
  for (int out = 1; out <= n; ++out) {
    if (out < i)
      rules.push_back(CoordinateRule::coord(out));
    else if (out == i)
      rules.push_back(j == 0 ? CoordinateRule::const0() : CoordinateRule::const1());
    else
      rules.push_back(CoordinateRule::coord(out - 1));
  }
  return CubeMorphism(n - 1, n, std::move(rules));
}

CubeMorphism simplicial_embedding(int n, uint32_t v) {
  if (v >= vertex_count(n)) throw std::invalid_argument("simplicial_embedding: vertex out of range");
  std::vector<CoordinateRule> rules;
  int rank = 0;
  for (int i = 1; i <= n; ++i) {
    if (coord(v, i))
      rules.push_back(CoordinateRule::coord(++rank));
    else
      rules.push_back(CoordinateRule::const0());
  }
  return CubeMorphism(height(v), n, std::move(rules));
}

CubeMorphism projection(int n, const std::vector<int>& t) {
  std::vector<CoordinateRule> rules;
  int prev = 0;
  for (int a : t) {
    if (a <= prev || a > n) throw std::invalid_argument("projection: T must be sorted within [1,n]");
    prev = a;
    rules.push_back(CoordinateRule::coord(a));
  }
  return CubeMorphism(n, static_cast<int>(t.size()), std::move(rules));
}

CubeMorphism reflection(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("reflection: i out of range");
  std::vector<CoordinateRule> rules;
  for (int out = 1; out <= n; ++out)
    rules.push_back(out == i ? CoordinateRule::neg_coord(out) : CoordinateRule::coord(out));
  return CubeMorphism(n, n, std::move(rules));
}

CubeMorphism transposition(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("transposition: index out of range");
  std::vector<CoordinateRule> rules;
  for (int out = 1; out <= n; ++out) {
    int src = out == i ? j : (out == j ? i : out);
    rules.push_back(CoordinateRule::coord(src));
  }
  return CubeMorphism(n, n, std::move(rules));
}

CubeMorphism alpha_embedding(int n) {
  std::vector<CoordinateRule> rules;
  for (int i = 1; i <= n; ++i) {
    rules.push_back(CoordinateRule::neg_coord(i));
    rules.push_back(CoordinateRule::coord(i));
  }
  return CubeMorphism(n, 2 * n, std::move(rules));
}

CubeMorphism reflection_to_top(int n, uint32_t w) {
  if (w >= vertex_count(n)) throw std::invalid_argument("reflection_to_top: vertex out of range");
  std::vector<CoordinateRule> rules;
  for (int i = 1; i <= n; ++i)
    rules.push_back(coord(w, i) ? CoordinateRule::coord(i) : CoordinateRule::neg_coord(i));
  return CubeMorphism(n, n, std::move(rules));
}

std::vector<uint32_t> reflection_group_orbit(int n, uint32_t v) {
  const uint32_t count = vertex_count(n);
  if (v >= count) throw std::invalid_argument("reflection_group_orbit: vertex out of range");
  std::vector<uint32_t> orbit;
  orbit.reserve(count);
  for (uint32_t w = 0; w < count; ++w) orbit.push_back(v ^ w);
  return orbit;
}

VertexMap::VertexMap(int source_dim, int target_dim, std::vector<uint32_t> tbl)
    : n(source_dim), m(target_dim), table(std::move(tbl)) {
  if (table.size() != vertex_count(n)) throw std::invalid_argument("vertex map table must have 2^n rows");
  for (uint32_t x : table)
    if (x >= vertex_count(m)) throw std::invalid_argument("vertex map value exceeds 2^m");
}

VertexMap to_vertex_map(const CubeMorphism& phi) {
  std::vector<uint32_t> table(vertex_count(phi.n));
  for (uint32_t v = 0; v < table.size(); ++v) table[v] = phi.apply_bits(v);
  return VertexMap(phi.n, phi.m, std::move(table));
}

std::optional<CubeMorphism> to_morphism(const VertexMap& f) {
  const uint32_t count = vertex_count(f.n);
  std::vector<CoordinateRule> rules;
  for (int i = 1; i <= f.m; ++i) {
    // Collect the output coordinate as a boolean function of the source vertex.
    auto out = [&](uint32_t v) { return coord(f.table[v], i); };
    bool constant = true;
    for (uint32_t v = 1; v < count && constant; ++v) constant = out(v) == out(0);
    if (constant) {
      rules.push_back(out(0) ? CoordinateRule::const1() : CoordinateRule::const0());
      continue;
    }
    bool found = false;
    for (int j = 1; j <= f.n && !found; ++j) {
      bool eq = true, neg = true;
      for (uint32_t v = 0; v < count; ++v) {
        int c = coord(v, j);
        if (out(v) != c) eq = false;
        if (out(v) != 1 - c) neg = false;
        if (!eq && !neg) break;
      }
      if (eq) {
        rules.push_back(CoordinateRule::coord(j));
        found = true;
      } else if (neg) {
        rules.push_back(CoordinateRule::neg_coord(j));
        found = true;
      }
    }
    if (!found) return std::nullopt;  // depends on more than one coordinate
  }
  return CubeMorphism(f.n, f.m, std::move(rules));
}

bool vertex_map_in_category(const VertexMap& f, Category cat) {
  auto phi = to_morphism(f);
  if (!phi) return false;
  return phi->in_category(cat);
}

std::vector<CubeMorphism> enumerate_morphisms(int n, int m, Category cat) {
  std::vector<CoordinateRule> options;
  options.push_back(CoordinateRule::const0());
  options.push_back(CoordinateRule::const1());
  for (int j = 1; j <= n; ++j) {
    options.push_back(CoordinateRule::coord(j));
    options.push_back(CoordinateRule::neg_coord(j));
  }
  std::vector<CubeMorphism> result;
  std::vector<CoordinateRule> rules(static_cast<size_t>(m));
  const size_t k = options.size();
  uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= k;
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int i = 0; i < m; ++i) {
      rules[static_cast<size_t>(i)] = options[c % k];
      c /= k;
    }
    CubeMorphism phi(n, m, rules);
    if (phi.in_category(cat)) result.push_back(std::move(phi));
  }
  return result;
}

}  // namespace cubelab
