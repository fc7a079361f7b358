#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubelab {

// Vertices of the discrete cube {0,1}^n are stored as bitmasks.
// Coordinate 1 is the least significant bit; serialized bit strings list
// coordinate 1 first ("101" means (1,0,1)).
inline constexpr int kMaxCubeDim = 20;

inline uint32_t vertex_count(int n) {
  if (n < 0 || n > kMaxCubeDim) throw std::invalid_argument("cube dimension out of range [0,20]");
  return 1u << n;
}

inline uint32_t top_vertex(int n) { return vertex_count(n) - 1; }

inline int height(uint32_t bits) { return std::popcount(bits); }

// 1-based coordinate access, matching the usual v_i notation.
inline int coord(uint32_t bits, int i) { return static_cast<int>((bits >> (i - 1)) & 1u); }

struct Vertex {
  int n = 0;
  uint32_t bits = 0;

  Vertex() = default;
  Vertex(int dim, uint32_t b) : n(dim), bits(b) {
    if (b >= vertex_count(dim)) throw std::invalid_argument("vertex bits exceed 2^n");
  }

  int coord(int i) const { return cubelab::coord(bits, i); }
  int height() const { return cubelab::height(bits); }
  bool operator==(const Vertex&) const = default;
};

inline std::string vertex_to_string(int n, uint32_t bits) {
  std::string s(static_cast<size_t>(n), '0');
  for (int i = 1; i <= n; ++i)
    if (coord(bits, i)) s[static_cast<size_t>(i - 1)] = '1';
  return s;
}

inline uint32_t vertex_from_string(const std::string& s) {
  if (s.size() > static_cast<size_t>(kMaxCubeDim)) throw std::invalid_argument("vertex string too long");
  uint32_t bits = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= 1u << i;
    else if (s[i] != '0')
      throw std::invalid_argument("vertex string must be over {0,1}");
  }
  return bits;
}

}  // namespace cubelab
