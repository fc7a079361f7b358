#pragma once

#include <string>
#include <vector>

#include "cubelab/morphism.hpp"
#include "cubelab/vertex.hpp"

namespace cubelab {

// A labeling of {0,1}^n by points of a structure's ground set, indexed by
// vertex bitmask (coordinate 1 = least significant bit).
struct CubeMap {
  int n = 0;
  std::vector<int> values;  // size 2^n

  CubeMap() = default;
  CubeMap(int dim, std::vector<int> vals);
  static CubeMap constant(int dim, int x);

  int at(uint32_t v) const { return values[v]; }
  bool operator==(const CubeMap&) const = default;
};

// A labeling of {0,1}^n minus the top vertex; masks 0..2^n-2 are exactly the
// non-top vertices, so values is indexed by mask directly.
struct Corner {
  int n = 0;
  std::vector<int> values;  // size 2^n - 1

  Corner() = default;
  Corner(int dim, std::vector<int> vals);
  static Corner of_cube_without_top(const CubeMap& c);

  int at(uint32_t v) const { return values[v]; }
  CubeMap completed_with(int top_value) const;
};

// c composed with phi: (c . phi)(v) = c(phi(v)); phi must target c's cube.
CubeMap pullback(const CubeMap& c, const CubeMorphism& phi);

// The (i,j)-face c . e^n_{i,j}, an (n-1)-dimensional cube map.
CubeMap face(const CubeMap& c, int i, int j);

// Canonical byte-string key for set membership and deduplication.
std::string cube_key(const CubeMap& c);

}  // namespace cubelab
