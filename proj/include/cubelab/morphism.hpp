#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubelab/vertex.hpp"

namespace cubelab {

// A coordinate rule for one output coordinate of a cube morphism: the
// constant 0 or 1, a source coordinate x_j, or its negation 1-x_j.
struct CoordinateRule {
  enum class Kind : uint8_t { Const0, Const1, Coord, NegCoord };
  Kind kind = Kind::Const0;
  int source = 0;  // 1-based source coordinate; 0 for constants

  static CoordinateRule const0() { return {Kind::Const0, 0}; }
  static CoordinateRule const1() { return {Kind::Const1, 0}; }
  static CoordinateRule coord(int j) { return {Kind::Coord, j}; }
  static CoordinateRule neg_coord(int j) { return {Kind::NegCoord, j}; }

  bool is_const() const { return kind == Kind::Const0 || kind == Kind::Const1; }

  int apply(uint32_t bits) const {
    switch (kind) {
      case Kind::Const0: return 0;
      case Kind::Const1: return 1;
      case Kind::Coord: return coord_of(bits);
      case Kind::NegCoord: return 1 - coord_of(bits);
    }
    return 0;
  }

  CoordinateRule negated() const {
    switch (kind) {
      case Kind::Const0: return const1();
      case Kind::Const1: return const0();
      case Kind::Coord: return neg_coord(source);
      case Kind::NegCoord: return coord(source);
    }
    return const0();
  }

  bool operator==(const CoordinateRule&) const = default;

 private:
  int coord_of(uint32_t bits) const { return cubelab::coord(bits, source); }
};

enum class Category { N, G };

// A cube morphism {0,1}^n -> {0,1}^m given coordinate-wise by m rules.
// Every rule-based morphism lies in the category N; membership in G is the
// monotonicity condition on the dependence function gamma.
struct CubeMorphism {
  int n = 0;  // source dimension
  int m = 0;  // target dimension
  std::vector<CoordinateRule> rules;

  CubeMorphism() = default;
  CubeMorphism(int source_dim, int target_dim, std::vector<CoordinateRule> r);

  // gamma(i) for the i-th output coordinate (1-based): 0 for constants,
  // otherwise the source coordinate index.
  int gamma(int i) const { return rules[static_cast<size_t>(i - 1)].source; }

  uint32_t apply_bits(uint32_t bits) const {
    uint32_t out = 0;
    for (int i = 1; i <= m; ++i)
      if (rules[static_cast<size_t>(i - 1)].apply(bits)) out |= 1u << (i - 1);
    return out;
  }

  Vertex apply(const Vertex& v) const;

  bool in_category(Category cat) const;

  bool operator==(const CubeMorphism&) const = default;
};

// phi2 after phi1; requires phi1.m == phi2.n.
CubeMorphism compose(const CubeMorphism& phi2, const CubeMorphism& phi1);

CubeMorphism identity_morphism(int n);
// e^n_{i,j}: {0,1}^{n-1} -> {0,1}^n, inserting the constant j at coordinate i.
CubeMorphism face_embedding(int n, int i, int j);
// s_v: {0,1}^{h(v)} -> {0,1}^n, the simplicial embedding onto the support of v.
CubeMorphism simplicial_embedding(int n, uint32_t v);
// p_T: {0,1}^n -> {0,1}^{|T|} for T given as a sorted list of 1-based coordinates.
CubeMorphism projection(int n, const std::vector<int>& t);
// r_i: flip coordinate i.
CubeMorphism reflection(int n, int i);
// t_{i,j}: swap coordinates i and j (in N, not in G for i != j).
CubeMorphism transposition(int n, int i, int j);
// alpha_n: {0,1}^n -> {0,1}^{2n}, x -> (1-x_1, x_1, ..., 1-x_n, x_n).
CubeMorphism alpha_embedding(int n);
// Composite of reflections gamma with gamma(w) = 1^n (an involution).
CubeMorphism reflection_to_top(int n, uint32_t w);

// The orbit of v under the reflection group R_n; always all of {0,1}^n.
std::vector<uint32_t> reflection_group_orbit(int n, uint32_t v);

// A map {0,1}^n -> {0,1}^m stored as a full vertex table.
struct VertexMap {
  int n = 0;
  int m = 0;
  std::vector<uint32_t> table;  // size 2^n, entries < 2^m

  VertexMap() = default;
  VertexMap(int source_dim, int target_dim, std::vector<uint32_t> tbl);
  uint32_t apply_bits(uint32_t bits) const { return table[bits]; }
};

VertexMap to_vertex_map(const CubeMorphism& phi);

// Rule decomposition of a raw vertex table; empty when no output coordinate
// rule exists, i.e. when the map is not a morphism in N.
std::optional<CubeMorphism> to_morphism(const VertexMap& f);

// Category membership of a raw map: decomposability for N, plus the gamma
// monotonicity for G. This is the combinatorial test of both categories.
bool vertex_map_in_category(const VertexMap& f, Category cat);

// All rule-based morphisms {0,1}^n -> {0,1}^m in the given category.
std::vector<CubeMorphism> enumerate_morphisms(int n, int m, Category cat);

}  // namespace cubelab
