#include "cubelab/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubelab {

SimplicialSet::SimplicialSet(int dim, std::vector<uint32_t> verts) : n(dim), members(std::move(verts)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (uint32_t v : members) {
    if (v >= vertex_count(n)) throw std::invalid_argument("simplicial set: vertex out of range");
    // Downward closure: every submask of v must be present.
    for (uint32_t a = v; ; a = (a - 1) & v) {
      if (!std::binary_search(members.begin(), members.end(), a))
        throw std::invalid_argument("simplicial set: not downward closed on supports");
      if (a == 0) break;
    }
  }
}

bool SimplicialSet::contains(uint32_t v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<uint32_t> SimplicialSet::maximal() const {
  std::vector<uint32_t> out;
  for (uint32_t v : members) {
    bool max = true;
    for (uint32_t w : members)
      if (w != v && (v & w) == v) {
        max = false;
        break;
      }
    if (max) out.push_back(v);
  }
  return out;
}

bool in_three_cube_set(int n, uint32_t v) {
  if (v >= vertex_count(2 * n)) throw std::invalid_argument("three-cube set: vertex out of range");
  for (int i = 1; i <= n; ++i)
    if (coord(v, 2 * i - 1) + coord(v, 2 * i) > 1) return false;
  return true;
}

SimplicialSet three_cube_set(int n) {
  std::vector<uint32_t> verts;
  for (uint32_t v = 0; v < vertex_count(2 * n); ++v)
    if (in_three_cube_set(n, v)) verts.push_back(v);
  return SimplicialSet(2 * n, std::move(verts));
}

uint32_t fold_vertex(int n, uint32_t v) {
  if (!in_three_cube_set(n, v)) throw std::invalid_argument("fold: vertex not in T_n");
  uint32_t out = 0;
  for (int i = 1; i <= n; ++i)
    if (coord(v, 2 * i - 1) + coord(v, 2 * i)) out |= 1u << (i - 1);
  return out;
}

uint32_t flat_vertex(int n, uint32_t v) {
  if (!in_three_cube_set(n, v)) throw std::invalid_argument("flat: vertex not in T_n");
  uint32_t out = 0;
  for (int i = 1; i <= n; ++i)
    if (coord(v, 2 * i)) out |= 1u << (i - 1);
  return out;
}

}  // namespace cubelab
