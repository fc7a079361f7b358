// Benchmark of the exact cubic-product kernels: the serial reference versus
// the OpenMP-partitioned sum, plus Monte-Carlo throughput. The two exact
// kernels must agree to 1e-12 on every case.
//
//   cubelab-bench [--threads T] [--orders 24,40] [--n 3] [--samples 200000]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubelab/gowers.hpp"
#include "cubelab/rng.hpp"

using namespace cubelab;

namespace {

template <typename F>
double time_it(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  int n = 3;
  uint64_t samples = 200000;
  std::vector<int> orders = {16, 24, 40};
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&] { return std::string(i + 1 < argc ? argv[++i] : ""); };
    if (arg == "--threads")
      threads = std::atoi(next().c_str());
    else if (arg == "--n")
      n = std::atoi(next().c_str());
    else if (arg == "--samples")
      samples = std::strtoull(next().c_str(), nullptr, 10);
    else if (arg == "--orders") {
      orders.clear();
      std::string list = next();
      for (size_t pos = 0; pos < list.size();) {
        size_t comma = list.find(',', pos);
        orders.push_back(std::atoi(list.substr(pos, comma - pos).c_str()));
        pos = comma == std::string::npos ? list.size() : comma + 1;
      }
    } else {
      std::fprintf(stderr, "usage: cubelab-bench [--threads T] [--orders a,b] [--n N] [--samples M]\n");
      return 2;
    }
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("openmp: max %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in (serial build)\n");
#endif

  Budget budget;
  budget.ops = UINT64_MAX;
  std::printf("%-8s %-4s %-14s %-12s %-12s %-9s %-10s\n", "order", "n", "tuples", "serial[s]",
              "parallel[s]", "speedup", "|diff|");
  for (int order : orders) {
    GroupTable g = make_cyclic(order);
    SplitMix64 rng(1);
    std::vector<Complex> vals;
    for (int i = 0; i < order; ++i) vals.emplace_back(rng.uniform_signed(), rng.uniform_signed());
    GroupFunction f(g, vals);
    FunctionSystem fs = FunctionSystem::diagonal(f, n);

    Complex serial_val, parallel_val;
    double ts = time_it([&] { serial_val = cubic_product_serial(fs, budget); });
    double tp = time_it([&] { parallel_val = cubic_product(fs, budget); });
    double diff = std::abs(serial_val - parallel_val);
    std::printf("%-8d %-4d %-14llu %-12.4f %-12.4f %-9.2f %-10.2e\n", order, n,
                static_cast<unsigned long long>(sat_pow(static_cast<uint64_t>(order),
                                                        static_cast<unsigned>(n + 1))),
                ts, tp, ts / tp, diff);
    if (diff > 1e-12) {
      std::fprintf(stderr, "kernel disagreement above 1e-12\n");
      return 1;
    }
  }

  {
    GroupTable g = make_cyclic(orders.back());
    SplitMix64 rng(2);
    std::vector<Complex> vals;
    for (int i = 0; i < g.order; ++i) vals.emplace_back(rng.uniform_signed(), rng.uniform_signed());
    GroupFunction f(g, vals);
    McResult r{};
    double tm = time_it([&] { r = gowers_norm_mc(f, n, samples, 7); });
    std::printf("mc: order %d, n %d, %llu samples in %.4f s (%.0f samples/s), stderr %.3e\n",
                g.order, n, static_cast<unsigned long long>(samples), tm,
                static_cast<double>(samples) / tm, r.stderr_mean);
  }
  return 0;
}
