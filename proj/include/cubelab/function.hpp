#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "cubelab/group.hpp"
#include "cubelab/vertex.hpp"

namespace cubelab {

using Complex = std::complex<double>;

// A complex-valued function on a finite group, one value per element index.
struct GroupFunction {
  const GroupTable* group = nullptr;
  std::vector<Complex> values;

  GroupFunction() = default;
  GroupFunction(const GroupTable& g, std::vector<Complex> vals) : group(&g), values(std::move(vals)) {
    if (values.size() != static_cast<size_t>(g.order))
      throw std::invalid_argument("group function needs one value per element");
  }
  static GroupFunction constant(const GroupTable& g, Complex c) {
    return GroupFunction(g, std::vector<Complex>(static_cast<size_t>(g.order), c));
  }

  Complex at(int x) const { return values[static_cast<size_t>(x)]; }
  double max_abs() const {
    double m = 0;
    for (const Complex& v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

// One function per vertex of {0,1}^n, all over the same group.
struct FunctionSystem {
  int n = 0;
  const GroupTable* group = nullptr;
  std::vector<GroupFunction> per_vertex;  // size 2^n, indexed by vertex mask

  FunctionSystem() = default;
  FunctionSystem(int dim, std::vector<GroupFunction> fs) : n(dim), per_vertex(std::move(fs)) {
    if (per_vertex.size() != vertex_count(n))
      throw std::invalid_argument("function system needs one function per vertex");
    group = per_vertex[0].group;
    for (const GroupFunction& f : per_vertex)
      if (f.group != group) throw std::invalid_argument("function system mixes groups");
  }

  // [f]_n: the same function at every vertex.
  static FunctionSystem diagonal(const GroupFunction& f, int dim) {
    return FunctionSystem(dim, std::vector<GroupFunction>(vertex_count(dim), f));
  }
};

}  // namespace cubelab
