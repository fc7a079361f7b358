#pragma once

#include <cstdint>
#include <vector>

#include "cubelab/vertex.hpp"

namespace cubelab {

// A downward-closed set of vertices: v in S implies every indicator of a
// subset of supp(v) is in S.
struct SimplicialSet {
  int n = 0;
  std::vector<uint32_t> members;  // sorted, unique

  SimplicialSet() = default;
  SimplicialSet(int dim, std::vector<uint32_t> verts);

  bool contains(uint32_t v) const;
  // Members whose support is not strictly contained in another member's.
  std::vector<uint32_t> maximal() const;
};

// T_n inside {0,1}^{2n}: vertices with v_{2i-1} + v_{2i} <= 1 for all i.
SimplicialSet three_cube_set(int n);

bool in_three_cube_set(int n, uint32_t v);

// Coordinate i of fold is v_{2i-1} + v_{2i}; of flat is v_{2i}. Both require
// v in T_n.
uint32_t fold_vertex(int n, uint32_t v);
uint32_t flat_vertex(int n, uint32_t v);

}  // namespace cubelab
