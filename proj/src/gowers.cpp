#include "cubelab/gowers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cubelab/rng.hpp"

namespace cubelab {

namespace {

// Product over the vertices of the spanned cube, conjugating at odd heights.
inline Complex vertex_term(const FunctionSystem& fs, const std::vector<int>& pts) {
  Complex prod{1.0, 0.0};
  for (uint32_t v = 0; v < pts.size(); ++v) {
    Complex val = fs.per_vertex[v].at(pts[v]);
    prod *= (height(v) % 2 != 0) ? std::conj(val) : val;
  }
  return prod;
}

// Fill pts[*] for the cube spanned by (a_0,...,a_n): pts[mask] is the
// left-to-right product a_0 * prod a_i^{bit i-1 of mask}.
inline void fill_points(const GroupTable& g, const std::vector<int>& tuple, std::vector<int>& pts) {
  pts[0] = tuple[0];
  for (uint32_t v = 1; v < pts.size(); ++v) {
    int hi = std::bit_width(v) - 1;
    pts[v] = g.op(pts[v & ~(1u << hi)], tuple[static_cast<size_t>(hi) + 1]);
  }
}

// Sum of the integrand over all tuples with a fixed first element.
Complex partial_sum_for_first(const FunctionSystem& fs, int a0) {
  const GroupTable& g = *fs.group;
  const int n = fs.n;
  std::vector<int> pts(vertex_count(n));
  pts[0] = a0;
  KahanComplex acc;
  // Depth i chooses a_i and extends the half-cube with bit i-1 set.
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      acc.add(vertex_term(fs, pts));
      return;
    }
    const uint32_t base = 1u << (i - 1);
    for (int a = 0; a < g.order; ++a) {
      for (uint32_t mask = 0; mask < base; ++mask) pts[base | mask] = g.op(pts[mask], a);
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return acc.sum;
}

uint64_t exact_cost(const FunctionSystem& fs) {
  return sat_pow(static_cast<uint64_t>(fs.group->order), static_cast<unsigned>(fs.n + 1)) *
         vertex_count(fs.n);
}

}  // namespace

Complex cubic_product_serial(const FunctionSystem& fs, const Budget& budget) {
  budget.require(exact_cost(fs), "exact cubic product");
  const GroupTable& g = *fs.group;
  KahanComplex acc;
  for (int a0 = 0; a0 < g.order; ++a0) acc.add(partial_sum_for_first(fs, a0));
  const double scale = std::pow(static_cast<double>(g.order), fs.n + 1);
  return acc.sum / scale;
}

Complex cubic_product(const FunctionSystem& fs, const Budget& budget) {
  budget.require(exact_cost(fs), "exact cubic product");
  const GroupTable& g = *fs.group;
  std::vector<Complex> partials(static_cast<size_t>(g.order));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int a0 = 0; a0 < g.order; ++a0) partials[static_cast<size_t>(a0)] = partial_sum_for_first(fs, a0);
  KahanComplex acc;
  for (const Complex& p : partials) acc.add(p);
  const double scale = std::pow(static_cast<double>(g.order), fs.n + 1);
  return acc.sum / scale;
}

Complex cubic_product_general_form(const FunctionSystem& fs, const Budget& budget) {
  const GroupTable& g = *fs.group;
  const int n = fs.n;
  budget.require(sat_pow(static_cast<uint64_t>(g.order), static_cast<unsigned>(2 * n)) * vertex_count(n),
                 "two-sided cubic product");
  // Level i extends the partial products by the pair (a_{i,0}, a_{i,1}).
  std::vector<std::vector<int>> levels(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) levels[static_cast<size_t>(i)].resize(vertex_count(i));
  levels[0][0] = g.id;
  KahanComplex acc;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      acc.add(vertex_term(fs, levels[static_cast<size_t>(n)]));
      return;
    }
    const auto& prev = levels[static_cast<size_t>(i - 1)];
    auto& cur = levels[static_cast<size_t>(i)];
    const uint32_t base = 1u << (i - 1);
    for (int a0 = 0; a0 < g.order; ++a0)
      for (int a1 = 0; a1 < g.order; ++a1) {
        for (uint32_t mask = 0; mask < base; ++mask) {
          cur[mask] = g.op(prev[mask], a0);
          cur[base | mask] = g.op(prev[mask], a1);
        }
        self(self, i + 1);
      }
  };
  rec(rec, 1);
  const double scale = std::pow(static_cast<double>(g.order), 2 * n);
  return acc.sum / scale;
}

NormResult gowers_norm(const GroupFunction& f, int n, const Budget& budget) {
  if (n < 1) throw std::invalid_argument("gowers_norm: n >= 1 required");
  FunctionSystem fs = FunctionSystem::diagonal(f, n);
  NormResult r;
  r.ops = exact_cost(fs);
  r.inner = cubic_product(fs, budget);
  const double scale = std::max(1.0, std::pow(f.max_abs(), static_cast<double>(vertex_count(n))));
  const double tol = 1e-12 * scale;
  if (std::abs(r.inner.imag()) > tol)
    throw std::runtime_error("gowers_norm: self product has a non-real residue (bug)");
  if (r.inner.real() < -tol)
    throw std::runtime_error("gowers_norm: self product is negative (bug)");
  r.norm = std::pow(std::max(r.inner.real(), 0.0), 1.0 / static_cast<double>(vertex_count(n)));
  return r;
}

McResult gowers_norm_mc(const GroupFunction& f, int n, uint64_t samples, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gowers_norm_mc: n >= 1 required");
  if (samples < 2) throw std::invalid_argument("gowers_norm_mc: at least 2 samples required");
  const GroupTable& g = *f.group;
  FunctionSystem fs = FunctionSystem::diagonal(f, n);
  const SplitMix64 base(seed);

  constexpr uint64_t kChunk = 1024;
  const uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Complex> sum_chunk(static_cast<size_t>(chunks));
  std::vector<double> sumsq_chunk(static_cast<size_t>(chunks));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int64_t ch = 0; ch < static_cast<int64_t>(chunks); ++ch) {
    KahanComplex acc;
    double sq = 0, sq_comp = 0;
    std::vector<int> tuple(static_cast<size_t>(n) + 1);
    std::vector<int> pts(vertex_count(n));
    const uint64_t lo = static_cast<uint64_t>(ch) * kChunk;
    const uint64_t hi = std::min(samples, lo + kChunk);
    for (uint64_t s = lo; s < hi; ++s) {
      SplitMix64 stream = base.split(s);
      for (int i = 0; i <= n; ++i)
        tuple[static_cast<size_t>(i)] = static_cast<int>(stream.uniform_index(static_cast<uint32_t>(g.order)));
      fill_points(g, tuple, pts);
      Complex term = vertex_term(fs, pts);
      acc.add(term);
      double y = term.real() * term.real() - sq_comp;
      double t = sq + y;
      sq_comp = (t - sq) - y;
      sq = t;
    }
    sum_chunk[static_cast<size_t>(ch)] = acc.sum;
    sumsq_chunk[static_cast<size_t>(ch)] = sq;
  }

  KahanComplex total;
  double total_sq = 0, c = 0;
  for (uint64_t ch = 0; ch < chunks; ++ch) {
    total.add(sum_chunk[static_cast<size_t>(ch)]);
    double y = sumsq_chunk[static_cast<size_t>(ch)] - c;
    double t = total_sq + y;
    c = (t - total_sq) - y;
    total_sq = t;
  }

  McResult r;
  r.samples = samples;
  r.seed = seed;
  r.mean_complex = total.sum / static_cast<double>(samples);
  r.mean = r.mean_complex.real();
  const double ns = static_cast<double>(samples);
  const double var = std::max(0.0, (total_sq - ns * r.mean * r.mean) / (ns - 1.0));
  r.stderr_mean = std::sqrt(var / ns);
  r.norm = std::pow(std::max(r.mean, 0.0), 1.0 / static_cast<double>(vertex_count(n)));
  return r;
}

GroupFunction star(const GroupFunction& f, const GroupFunction& g) {
  if (f.group != g.group) throw std::invalid_argument("star: functions over different groups");
  const GroupTable& grp = *f.group;
  std::vector<Complex> vals(static_cast<size_t>(grp.order));
  for (int x = 0; x < grp.order; ++x) {
    KahanComplex acc;
    for (int y = 0; y < grp.order; ++y) acc.add(f.at(grp.op(x, y)) * std::conj(g.at(y)));
    vals[static_cast<size_t>(x)] = acc.sum / static_cast<double>(grp.order);
  }
  return GroupFunction(grp, std::move(vals));
}

double l2_norm(const GroupFunction& f) {
  double acc = 0;
  for (const Complex& v : f.values) acc += std::norm(v);
  return std::sqrt(acc / static_cast<double>(f.group->order));
}

FunctionSystem face_operator(const FunctionSystem& fs, int d, int r) {
  if (d < 1 || d > fs.n || (r != 0 && r != 1)) throw std::invalid_argument("face_operator: bad indices");
  std::vector<GroupFunction> out(vertex_count(fs.n));
  for (uint32_t v = 0; v < out.size(); ++v) {
    uint32_t q = r ? (v | (1u << (d - 1))) : (v & ~(1u << (d - 1)));
    out[v] = fs.per_vertex[q];
  }
  return FunctionSystem(fs.n, std::move(out));
}

}  // namespace cubelab
