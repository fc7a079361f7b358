#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cubelab/budget.hpp"
#include "cubelab/group.hpp"

namespace cubelab {

// An exact distribution over cube vertex tables: integer counts against the
// parameter-space size, never floating point.
struct CubeDistribution {
  int k = 0;
  uint64_t total = 0;                           // number of parameter tuples
  std::map<std::vector<int>, uint64_t> counts;  // vertex table -> tuple count
};

// Distribution of the random cube spanned by k+1 uniform elements (simple
// form) or by 2k uniform elements (two-sided form).
CubeDistribution cube_distribution(const GroupTable& g, int k, bool two_sided, const Budget& budget);

// Exact equality of the two rational distributions.
bool distributions_equal(const CubeDistribution& a, const CubeDistribution& b);

struct Rational {
  uint64_t num = 0;
  uint64_t den = 1;
};

// Exact total variation distance (1/2) sum |p - q| as a reduced fraction.
Rational total_variation(const CubeDistribution& a, const CubeDistribution& b);

}  // namespace cubelab
