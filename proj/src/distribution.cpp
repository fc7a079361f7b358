#include "cubelab/distribution.hpp"

#include <numeric>
#include <stdexcept>

#include "cubelab/vertex.hpp"

namespace cubelab {

CubeDistribution cube_distribution(const GroupTable& g, int k, bool two_sided, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("cube_distribution: k >= 1 required");
  CubeDistribution dist;
  dist.k = k;
  const auto order = static_cast<uint64_t>(g.order);
  const unsigned params = two_sided ? static_cast<unsigned>(2 * k) : static_cast<unsigned>(k + 1);
  dist.total = sat_pow(order, params);
  budget.require(dist.total * vertex_count(k), "exact cube distribution");

  std::vector<int> tuple(params);
  std::vector<int> vals(vertex_count(k));
  for (uint64_t code = 0; code < dist.total; ++code) {
    uint64_t c = code;
    for (unsigned i = 0; i < params; ++i) {
      tuple[i] = static_cast<int>(c % order);
      c /= order;
    }
    if (two_sided) {
      // a_{i,j} = tuple[2(i-1)+j]; value at v is the left-to-right product.
      for (uint32_t v = 0; v < vals.size(); ++v) {
        int x = g.id;
        for (int i = 1; i <= k; ++i) x = g.op(x, tuple[static_cast<size_t>(2 * (i - 1) + coord(v, i))]);
        vals[v] = x;
      }
    } else {
      vals[0] = tuple[0];
      for (uint32_t v = 1; v < vals.size(); ++v) {
        int hi = std::bit_width(v) - 1;
        vals[v] = g.op(vals[v & ~(1u << hi)], tuple[static_cast<size_t>(hi) + 1]);
      }
    }
    ++dist.counts[vals];
  }
  return dist;
}

bool distributions_equal(const CubeDistribution& a, const CubeDistribution& b) {
  if (a.k != b.k) return false;
  // p = c_a / T_a equals q = c_b / T_b iff c_a * T_b == c_b * T_a, checked
  // over the union of supports.
  auto ita = a.counts.begin();
  auto itb = b.counts.begin();
  while (ita != a.counts.end() || itb != b.counts.end()) {
    if (itb == b.counts.end() || (ita != a.counts.end() && ita->first < itb->first)) return false;
    if (ita == a.counts.end() || itb->first < ita->first) return false;
    if (static_cast<unsigned __int128>(ita->second) * b.total !=
        static_cast<unsigned __int128>(itb->second) * a.total)
      return false;
    ++ita;
    ++itb;
  }
  return true;
}

Rational total_variation(const CubeDistribution& a, const CubeDistribution& b) {
  if (a.k != b.k) throw std::invalid_argument("total_variation: dimension mismatch");
  // (1/2) sum |c_a T_b - c_b T_a| / (T_a T_b), accumulated in 128-bit.
  unsigned __int128 num = 0;
  auto ita = a.counts.begin();
  auto itb = b.counts.begin();
  auto take = [&](uint64_t ca, uint64_t cb) {
    auto lhs = static_cast<unsigned __int128>(ca) * b.total;
    auto rhs = static_cast<unsigned __int128>(cb) * a.total;
    num += lhs > rhs ? lhs - rhs : rhs - lhs;
  };
  while (ita != a.counts.end() || itb != b.counts.end()) {
    if (itb == b.counts.end() || (ita != a.counts.end() && ita->first < itb->first)) {
      take(ita->second, 0);
      ++ita;
    } else if (ita == a.counts.end() || itb->first < ita->first) {
      take(0, itb->second);
      ++itb;
    } else {
      take(ita->second, itb->second);
      ++ita;
      ++itb;
    }
  }
  unsigned __int128 den = static_cast<unsigned __int128>(a.total) * b.total * 2;
  if (num == 0) return Rational{0, 1};
  auto gcd128 = [](unsigned __int128 x, unsigned __int128 y) {
    while (y != 0) {
      unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    return x;
  };
  unsigned __int128 d = gcd128(num, den);
  num /= d;
  den /= d;
  if (num > UINT64_MAX || den > UINT64_MAX)
    throw std::overflow_error("total_variation: fraction does not fit in 64 bits");
  return Rational{static_cast<uint64_t>(num), static_cast<uint64_t>(den)};
}

}  // namespace cubelab
