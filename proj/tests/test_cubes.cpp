#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubelab/morphism.hpp"
#include "cubelab/simplicial.hpp"
#include "cubelab/vertex.hpp"

using namespace cubelab;

namespace {

// (v1,v2,...) written in coordinate order, coordinate 1 first.
uint32_t bits(std::initializer_list<int> coords) {
  uint32_t b = 0;
  int i = 0;
  for (int c : coords) {
    if (c) b |= 1u << i;
    ++i;
  }
  return b;
}

}  // namespace

TEST_CASE("vertex basics") {
  CHECK(vertex_to_string(3, bits({1, 0, 1})) == "101");
  CHECK(vertex_from_string("101") == bits({1, 0, 1}));
  CHECK(height(bits({1, 0, 1})) == 2);
  CHECK(coord(bits({1, 0, 1}), 1) == 1);
  CHECK(coord(bits({1, 0, 1}), 2) == 0);
  CHECK_THROWS(Vertex(2, 4));
  CHECK_THROWS(vertex_count(21));
  CHECK(vertex_count(0) == 1);
}

TEST_CASE("apply: identity, a mixed rule list, a reflection") {
  CHECK(identity_morphism(3).apply_bits(bits({1, 0, 1})) == bits({1, 0, 1}));

  CubeMorphism phi(2, 5,
                   {CoordinateRule::const0(), CoordinateRule::coord(1), CoordinateRule::coord(2),
                    CoordinateRule::const1(), CoordinateRule::coord(1)});
  CHECK(phi.apply_bits(bits({1, 0})) == bits({0, 1, 0, 1, 1}));

  CHECK(reflection(2, 2).apply_bits(bits({0, 0})) == bits({0, 1}));
  CHECK_THROWS(phi.apply(Vertex(3, 0)));
}

TEST_CASE("category membership of the two witness maps") {
  // (x1,x2) -> (0,x1,x2,1,x1) is in N but not in G.
  CubeMorphism phi(2, 5,
                   {CoordinateRule::const0(), CoordinateRule::coord(1), CoordinateRule::coord(2),
                    CoordinateRule::const1(), CoordinateRule::coord(1)});
  CHECK(phi.in_category(Category::N));
  CHECK_FALSE(phi.in_category(Category::G));

  // (x1,x2) -> (0,x1,x1,1,x2) is in both.
  CubeMorphism psi(2, 5,
                   {CoordinateRule::const0(), CoordinateRule::coord(1), CoordinateRule::coord(1),
                    CoordinateRule::const1(), CoordinateRule::coord(2)});
  CHECK(psi.in_category(Category::N));
  CHECK(psi.in_category(Category::G));

  // XOR depends on two coordinates: not expressible at all.
  VertexMap raw(2, 1, {0, 1, 1, 0});
  CHECK_FALSE(vertex_map_in_category(raw, Category::N));
  CHECK_FALSE(to_morphism(raw).has_value());
}

TEST_CASE("compose: identities, involutions, projection after face embedding") {
  CubeMorphism phi(2, 3,
                   {CoordinateRule::coord(2), CoordinateRule::const1(), CoordinateRule::coord(1)});
  CHECK(compose(identity_morphism(3), phi) == phi);
  CHECK(compose(phi, identity_morphism(2)) == phi);

  CHECK(compose(reflection(2, 1), reflection(2, 1)) == identity_morphism(2));
  CHECK(compose(projection(2, {1}), face_embedding(2, 2, 0)) == identity_morphism(1));
  CHECK_THROWS(compose(phi, phi));
}

TEST_CASE("standard morphism zoo matches the coordinate formulas") {
  CHECK(face_embedding(2, 1, 0).apply_bits(1) == bits({0, 1}));
  CHECK(alpha_embedding(1).apply_bits(0) == bits({1, 0}));
  CHECK(alpha_embedding(1).apply_bits(1) == bits({0, 1}));
  CHECK(simplicial_embedding(3, bits({1, 0, 1})).apply_bits(bits({1, 1})) == bits({1, 0, 1}));
  CHECK(transposition(3, 1, 2).apply_bits(bits({1, 0, 1})) == bits({0, 1, 1}));

  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j <= 1; ++j) CHECK(face_embedding(n, i, j).in_category(Category::G));
    CHECK(alpha_embedding(n).in_category(Category::G));
    for (uint32_t v = 0; v < vertex_count(n); ++v)
      CHECK(simplicial_embedding(n, v).in_category(Category::G));
    for (int i = 1; i <= n; ++i) CHECK(reflection(n, i).in_category(Category::G));
  }
  CHECK_FALSE(transposition(2, 1, 2).in_category(Category::G));
  CHECK(transposition(2, 1, 2).in_category(Category::N));
  CHECK_THROWS(face_embedding(2, 3, 0));
}

TEST_CASE("fold and flat on the doubled cube") {
  CHECK(fold_vertex(2, bits({1, 0, 0, 1})) == bits({1, 1}));
  CHECK(flat_vertex(2, bits({1, 0, 0, 1})) == bits({0, 1}));
  CHECK(fold_vertex(1, 0) == 0);
  CHECK(flat_vertex(1, 0) == 0);
  CHECK_THROWS(fold_vertex(1, bits({1, 1})));  // not in T_1

  // alpha places (1-x_i, x_i) in pair i, so flat recovers the input and
  // fold lands on the top vertex; exhaustively for n <= 4.
  for (int n = 1; n <= 4; ++n) {
    CubeMorphism alpha = alpha_embedding(n);
    for (uint32_t w = 0; w < vertex_count(n); ++w) {
      CHECK(flat_vertex(n, alpha.apply_bits(w)) == w);
      CHECK(fold_vertex(n, alpha.apply_bits(w)) == top_vertex(n));
    }
  }

  // fold . s_v is the identity for every maximal v in T_n, n <= 3.
  for (int n = 1; n <= 3; ++n) {
    SimplicialSet tn = three_cube_set(n);
    for (uint32_t v : tn.maximal()) {
      CHECK(height(v) == n);
      CubeMorphism sv = simplicial_embedding(2 * n, v);
      for (uint32_t w = 0; w < vertex_count(n); ++w)
        CHECK(fold_vertex(n, sv.apply_bits(w)) == w);
    }
  }
}

TEST_CASE("simplicial sets: closure validation and T_n") {
  CHECK_THROWS(SimplicialSet(2, {bits({1, 1})}));  // missing subsets
  SimplicialSet s(2, {0, bits({1, 0}), bits({0, 1}), bits({1, 1})});
  CHECK(s.maximal() == std::vector<uint32_t>{bits({1, 1})});

  SimplicialSet t2 = three_cube_set(2);
  CHECK(t2.members.size() == 9);  // 3^2 choices per coordinate pair
  CHECK(t2.maximal().size() == 4);
  for (uint32_t v : t2.members) CHECK(in_three_cube_set(2, v));
}

TEST_CASE("reflection orbit covers the cube; the to-top reflection is an involution") {
  auto orbit = reflection_group_orbit(2, bits({0, 1}));
  CHECK(orbit.size() == 4);
  std::sort(orbit.begin(), orbit.end());
  CHECK(orbit == std::vector<uint32_t>{0, 1, 2, 3});

  CHECK(reflection_group_orbit(0, 0) == std::vector<uint32_t>{0});

  CubeMorphism gamma = reflection_to_top(3, bits({0, 1, 0}));
  CHECK(gamma.apply_bits(bits({0, 1, 0})) == bits({1, 1, 1}));
  CHECK(gamma == compose(reflection(3, 1), reflection(3, 3)));
  CHECK(compose(gamma, gamma) == identity_morphism(3));
  CHECK(gamma.in_category(Category::G));
}

TEST_CASE("category closure under composition, exhaustively for dims <= 3") {
  for (Category cat : {Category::G, Category::N}) {
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 3; ++k) {
          auto inner = enumerate_morphisms(n, m, cat);
          auto outer = enumerate_morphisms(m, k, cat);
          for (const auto& p2 : outer)
            for (const auto& p1 : inner) {
              CubeMorphism comp = compose(p2, p1);
              CHECK(comp.in_category(cat));
              for (uint32_t v = 0; v < vertex_count(n); ++v)
                CHECK(comp.apply_bits(v) == p2.apply_bits(p1.apply_bits(v)));
            }
        }
  }
}

TEST_CASE("every non-injective map in N factors through a reflection") {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const CubeMorphism& phi : enumerate_morphisms(n, m, Category::N)) {
        std::vector<bool> seen(vertex_count(m), false);
        bool injective = true;
        for (uint32_t v = 0; v < vertex_count(n); ++v) {
          uint32_t img = phi.apply_bits(v);
          if (seen[img]) injective = false;
          seen[img] = true;
        }
        if (injective) continue;
        bool fixed_by_some_reflection = false;
        for (int i = 1; i <= n && !fixed_by_some_reflection; ++i) {
          CubeMorphism composed = compose(phi, reflection(n, i));
          fixed_by_some_reflection = composed == phi;
        }
        CHECK(fixed_by_some_reflection);
      }
}

TEST_CASE("raw-map decomposition round trips and matches categories") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (Category cat : {Category::G, Category::N})
        for (const CubeMorphism& phi : enumerate_morphisms(n, m, cat)) {
          auto back = to_morphism(to_vertex_map(phi));
          REQUIRE(back.has_value());
          CHECK(to_vertex_map(*back).table == to_vertex_map(phi).table);
          CHECK(vertex_map_in_category(to_vertex_map(phi), cat));
        }
}
