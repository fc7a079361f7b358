#include "cubelab/cube_map.hpp"

#include <stdexcept>

namespace cubelab {

CubeMap::CubeMap(int dim, std::vector<int> vals) : n(dim), values(std::move(vals)) {
  if (values.size() != vertex_count(n))
    throw std::invalid_argument("cube map must have exactly 2^n values");
}

CubeMap CubeMap::constant(int dim, int x) {
  return CubeMap(dim, std::vector<int>(vertex_count(dim), x));
}

Corner::Corner(int dim, std::vector<int> vals) : n(dim), values(std::move(vals)) {
  if (n < 1) throw std::invalid_argument("corner dimension must be >= 1");
  if (values.size() != vertex_count(n) - 1)
    throw std::invalid_argument("corner must have exactly 2^n - 1 values");
}

Corner Corner::of_cube_without_top(const CubeMap& c) {
  std::vector<int> vals(c.values.begin(), c.values.end() - 1);
  return Corner(c.n, std::move(vals));
}

CubeMap Corner::completed_with(int top_value) const {
  std::vector<int> vals = values;
  vals.push_back(top_value);
  return CubeMap(n, std::move(vals));
}

CubeMap pullback(const CubeMap& c, const CubeMorphism& phi) {
  if (phi.m != c.n) throw std::invalid_argument("pullback: morphism target dimension mismatch");
  std::vector<int> vals(vertex_count(phi.n));
  for (uint32_t v = 0; v < vals.size(); ++v) vals[v] = c.values[phi.apply_bits(v)];
  return CubeMap(phi.n, std::move(vals));
}

CubeMap face(const CubeMap& c, int i, int j) {
  if (i < 1 || i > c.n || (j != 0 && j != 1)) throw std::invalid_argument("face: bad indices");
  const uint32_t low = (1u << (i - 1)) - 1;
  std::vector<int> vals(vertex_count(c.n - 1));
  for (uint32_t v = 0; v < vals.size(); ++v) {
    uint32_t w = (v & low) | (static_cast<uint32_t>(j) << (i - 1)) | ((v & ~low) << 1);
    vals[v] = c.values[w];
  }
  return CubeMap(c.n - 1, std::move(vals));
}

std::string cube_key(const CubeMap& c) {
  std::string key;
  key.reserve(c.values.size() * 4);
  for (int v : c.values) {
    auto u = static_cast<uint32_t>(v);
    key.push_back(static_cast<char>(u & 0xff));
    key.push_back(static_cast<char>((u >> 8) & 0xff));
    key.push_back(static_cast<char>((u >> 16) & 0xff));
    key.push_back(static_cast<char>((u >> 24) & 0xff));
  }
  return key;
}

}  // namespace cubelab
