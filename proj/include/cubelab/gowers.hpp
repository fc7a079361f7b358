#pragma once

#include <cstdint>

#include "cubelab/budget.hpp"
#include "cubelab/function.hpp"

namespace cubelab {

// Compensated complex accumulator (Kahan).
struct KahanComplex {
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  void add(Complex v) {
    Complex y = v - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Exact cubic product: the average over all (n+1)-tuples of group elements
// of the product of the vertex functions along the spanned cube, conjugated
// at odd-height vertices.
//
// cubic_product partitions the sum over the first parameter (OpenMP) with a
// compensated sum per partition, reduced in index order, so the value does
// not depend on the thread count. cubic_product_serial is the plain
// single-loop reference kept for testing and benchmarking.
Complex cubic_product(const FunctionSystem& fs, const Budget& budget);
Complex cubic_product_serial(const FunctionSystem& fs, const Budget& budget);

// The equivalent two-sided form averaging over 2n parameters a_{i,j}.
Complex cubic_product_general_form(const FunctionSystem& fs, const Budget& budget);

struct NormResult {
  double norm = 0;
  Complex inner{0.0, 0.0};
  uint64_t ops = 0;
};

// The uniformity norm of order n: the 2^n-th root of the self cubic
// product. The inner value must be real and nonnegative up to a 1e-12
// residue (scaled by the function's magnitude); anything else throws, since
// it can only be an implementation bug.
NormResult gowers_norm(const GroupFunction& f, int n, const Budget& budget);

struct McResult {
  double norm = 0;
  double mean = 0;     // real part of the sample mean of the integrand
  double stderr_mean = 0;
  Complex mean_complex{0.0, 0.0};
  uint64_t samples = 0;
  uint64_t seed = 0;
};

// Monte-Carlo estimate of the order-n inner product and norm. Tuples are
// drawn from per-sample SplitMix64 streams derived from the seed, and
// partial sums are reduced in fixed chunk order, so the result is
// bit-identical for a given seed regardless of threading.
McResult gowers_norm_mc(const GroupFunction& f, int n, uint64_t samples, uint64_t seed);

// (f ⋆ g)(x) = avg_y f(xy) conj(g(y)).
GroupFunction star(const GroupFunction& f, const GroupFunction& g);

// L2 norm under the uniform measure.
double l2_norm(const GroupFunction& f);

// Q_{d,r}: replace the function at v by the one at v with coordinate d set
// to r.
FunctionSystem face_operator(const FunctionSystem& fs, int d, int r);

}  // namespace cubelab
