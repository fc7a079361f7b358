#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubelab/function.hpp"
#include "cubelab/group.hpp"
#include "cubelab/rng.hpp"

namespace cubelab::test {

// All isomorphism types of order <= 8, by construction.
inline std::vector<std::pair<std::string, GroupTable>> groups_up_to_order_8() {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back("Z" + std::to_string(n), make_cyclic(n));
  out.emplace_back("Z2xZ2", direct_product(make_cyclic(2), make_cyclic(2)));
  out.emplace_back("S3", make_symmetric(3));
  out.emplace_back("Z4xZ2", direct_product(make_cyclic(4), make_cyclic(2)));
  out.emplace_back("Z2xZ2xZ2", direct_product(make_cyclic(2), direct_product(make_cyclic(2), make_cyclic(2))));
  out.emplace_back("D4", make_dihedral(4));
  out.emplace_back("Q8", make_quaternion8());
  return out;
}

// Parity of a one-line permutation name like "2134" (inversion count).
inline bool even_permutation_name(const std::string& name) {
  int inversions = 0;
  for (size_t i = 0; i < name.size(); ++i)
    for (size_t j = i + 1; j < name.size(); ++j)
      if (name[i] > name[j]) ++inversions;
  return inversions % 2 == 0;
}

// The alternating group A4 as the even subgroup of S4.
inline GroupTable make_alternating4() {
  GroupTable s4 = make_symmetric(4);
  std::vector<int> even;
  for (int x = 0; x < s4.order; ++x)
    if (even_permutation_name(s4.name(x))) even.push_back(x);
  return subgroup_table(s4, even).sub;
}

inline GroupFunction random_function(const GroupTable& g, SplitMix64& rng) {
  std::vector<Complex> vals;
  for (int i = 0; i < g.order; ++i) vals.emplace_back(rng.uniform_signed(), rng.uniform_signed());
  return GroupFunction(g, std::move(vals));
}

}  // namespace cubelab::test
