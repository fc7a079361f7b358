#include "cubelab/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cubelab {

void CubeStructure::check_point_range(const CubeMap& c) const {
  for (int v : c.values)
    if (v < 0 || v >= size()) throw std::invalid_argument("cube map value outside the ground set");
}

std::vector<int> CubeStructure::completion_values(const Corner& f) const {
  for (int i = 1; i <= f.n; ++i) {
    // Lower face of the corner along e^n_{i,0} misses the top vertex only
    // when i's coordinate is forced to 0, so it is fully determined.
    const uint32_t low = (1u << (i - 1)) - 1;
    std::vector<int> vals(vertex_count(f.n - 1));
    for (uint32_t v = 0; v < vals.size(); ++v) vals[v] = f.values[(v & low) | ((v & ~low) << 1)];
    if (!contains(CubeMap(f.n - 1, std::move(vals))))
      throw std::invalid_argument("corner face " + std::to_string(i) + " is not a cube");
  }
  std::vector<int> result;
  for (int x = 0; x < size(); ++x)
    if (contains(f.completed_with(x))) result.push_back(x);
  return result;
}

std::vector<CubeMap> CubeStructure::complete_corner(const Corner& f) const {
  std::vector<CubeMap> out;
  for (int x : completion_values(f)) out.push_back(f.completed_with(x));
  return out;
}

// ---------------------------------------------------------------------------
// D1
// ---------------------------------------------------------------------------

D1Structure::D1Structure(GroupTable g) : group_(std::move(g)) {}

std::string D1Structure::describe() const {
  return "D1(order " + std::to_string(group_.order) + ")";
}

CubeMap D1Structure::simple_cube(const std::vector<int>& params, int n) const {
  std::vector<int> vals(vertex_count(n));
  vals[0] = params[0];
  for (uint32_t v = 1; v < vals.size(); ++v) {
    int hi = std::bit_width(v) - 1;  // largest set coordinate, 0-based
    vals[v] = group_.op(vals[v & ~(1u << hi)], params[static_cast<size_t>(hi) + 1]);
  }
  return CubeMap(n, std::move(vals));
}

bool D1Structure::contains(const CubeMap& c) const {
  check_point_range(c);
  if (c.n == 0) return true;
  // Reconstruct the parameters from the values at 0 and the unit vectors,
  // then verify every vertex.
  const int a0 = c.at(0);
  const int a0inv = group_.invert(a0);
  std::vector<int> vals(vertex_count(c.n));
  vals[0] = a0;
  for (uint32_t v = 1; v < vals.size(); ++v) {
    int hi = std::bit_width(v) - 1;
    int ai = group_.op(a0inv, c.at(1u << hi));
    vals[v] = group_.op(vals[v & ~(1u << hi)], ai);
    if (vals[v] != c.at(v)) return false;
  }
  return true;
}

std::vector<CubeMap> D1Structure::enumerate(int n, const Budget& budget) const {
  const auto order = static_cast<uint64_t>(group_.order);
  budget.require(sat_pow(order, static_cast<unsigned>(n + 1)) * vertex_count(n),
                 "enumerate C^" + std::to_string(n) + " of " + describe());
  std::vector<CubeMap> out;
  std::unordered_set<std::string> seen;
  std::vector<int> params(static_cast<size_t>(n + 1), 0);
  const uint64_t total = sat_pow(order, static_cast<unsigned>(n + 1));
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int i = 0; i <= n; ++i) {
      params[static_cast<size_t>(i)] = static_cast<int>(c % order);
      c /= order;
    }
    CubeMap cube = simple_cube(params, n);
    if (seen.insert(cube_key(cube)).second) out.push_back(std::move(cube));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dk
// ---------------------------------------------------------------------------

DkStructure::DkStructure(GroupTable abelian, int k) : group_(std::move(abelian)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("Dk: k >= 1 required");
  if (!is_abelian(group_)) throw std::invalid_argument("Dk: the group must be abelian");
}

std::string DkStructure::describe() const {
  return "D" + std::to_string(k_) + "(abelian order " + std::to_string(group_.order) + ")";
}

int alternating_sum(const GroupTable& abelian, const CubeMap& c) {
  int acc = abelian.id;
  for (uint32_t v = 0; v < vertex_count(c.n); ++v)
    acc = abelian.op(acc, height(v) % 2 == 0 ? c.at(v) : abelian.invert(c.at(v)));
  return acc;
}

bool DkStructure::contains(const CubeMap& c) const {
  check_point_range(c);
  // w(c . s_v) = 0 for every v of height >= k+1.
  for (uint32_t v = 0; v < vertex_count(c.n); ++v) {
    if (height(v) < k_ + 1) continue;
    int acc = group_.id;
    uint32_t sub = v;
    while (true) {
      acc = group_.op(acc, height(sub) % 2 == 0 ? c.at(sub) : group_.invert(c.at(sub)));
      if (sub == 0) break;
      sub = (sub - 1) & v;
    }
    if (acc != group_.id) return false;
  }
  return true;
}

std::vector<CubeMap> DkStructure::enumerate(int n, const Budget& budget) const {
  // Free choice on the low hull {h <= k}; every higher vertex is filled
  // uniquely, in height order, by the vanishing of w over its support.
  std::vector<uint32_t> low, high;
  for (uint32_t v = 0; v < vertex_count(n); ++v) (height(v) <= k_ ? low : high).push_back(v);
  std::stable_sort(high.begin(), high.end(),
                   [](uint32_t a, uint32_t b) { return height(a) < height(b); });
  const auto order = static_cast<uint64_t>(group_.order);
  const uint64_t total = sat_pow(order, static_cast<unsigned>(low.size()));
  budget.require(total * vertex_count(n), "enumerate C^" + std::to_string(n) + " of " + describe());

  std::vector<CubeMap> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<int> vals(vertex_count(n));
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (uint32_t v : low) {
      vals[v] = static_cast<int>(c % order);
      c /= order;
    }
    for (uint32_t v : high) {
      int acc = group_.id;
      for (uint32_t sub = (v - 1) & v;; sub = (sub - 1) & v) {
        acc = group_.op(acc, height(sub) % 2 == 0 ? vals[sub] : group_.invert(vals[sub]));
        if (sub == 0) break;
      }
      // (-1)^{h(v)} x + acc = 0
      vals[v] = height(v) % 2 == 0 ? group_.invert(acc) : acc;
    }
    out.push_back(CubeMap(n, vals));
  }
  return out;
}

// ---------------------------------------------------------------------------
// HZk
// ---------------------------------------------------------------------------

HZkStructure::HZkStructure(GroupTable g, std::vector<int> central_subgroup, int k)
    : group_(std::move(g)), z_(std::move(central_subgroup)), k_(k) {
  std::sort(z_.begin(), z_.end());
  z_.erase(std::unique(z_.begin(), z_.end()), z_.end());
  if (!is_subgroup(group_, z_)) throw std::invalid_argument("HZk: Z is not a subgroup");
  if (!is_central_subset(group_, z_)) throw std::invalid_argument("HZk: Z is not central");
  if (z_.size() < 2) throw std::invalid_argument("HZk: Z must be non-trivial");
  zsub_ = subgroup_table(group_, z_);
  quot_ = quotient(group_, z_);
  dk_z_ = std::make_unique<DkStructure>(zsub_.sub, k_);
  d1_g_ = std::make_unique<D1Structure>(group_);
  d1_q_ = std::make_unique<D1Structure>(quot_.quotient);
}

std::string HZkStructure::describe() const {
  return "H_{Z," + std::to_string(k_) + "}(order " + std::to_string(group_.order) + ", |Z|=" +
         std::to_string(z_.size()) + ")";
}

bool HZkStructure::contains(const CubeMap& c) const {
  check_point_range(c);
  if (c.n == 0) return true;
  // Projection mod Z must be a 1-step cube of G/Z.
  std::vector<int> qvals(vertex_count(c.n));
  for (uint32_t v = 0; v < qvals.size(); ++v) qvals[v] = quot_.class_of[static_cast<size_t>(c.at(v))];
  if (!d1_q_->contains(CubeMap(c.n, std::move(qvals)))) return false;
  // Any 1-step lift differs from c by a central residual; use the lift
  // reconstructed from c's values at 0 and the unit vectors. The residual
  // must land in Z and be a degree-k cube there.
  const int a0 = c.at(0);
  const int a0inv = group_.invert(a0);
  std::vector<int> lift(vertex_count(c.n));
  std::vector<int> residual(vertex_count(c.n));
  lift[0] = a0;
  residual[0] = zsub_.from_parent[static_cast<size_t>(group_.id)];
  for (uint32_t v = 1; v < lift.size(); ++v) {
    int hi = std::bit_width(v) - 1;
    int ai = group_.op(a0inv, c.at(1u << hi));
    lift[v] = group_.op(lift[v & ~(1u << hi)], ai);
    int r = group_.op(group_.invert(lift[v]), c.at(v));
    int rz = zsub_.from_parent[static_cast<size_t>(r)];
    if (rz < 0) return false;
    residual[v] = rz;
  }
  return dk_z_->contains(CubeMap(c.n, std::move(residual)));
}

bool HZkStructure::contains_by_search(const CubeMap& c, const Budget& budget) const {
  check_point_range(c);
  for (const CubeMap& f : dk_z_->enumerate(c.n, budget)) {
    std::vector<int> g(vertex_count(c.n));
    for (uint32_t v = 0; v < g.size(); ++v)
      g[v] = group_.op(group_.invert(zsub_.to_parent[static_cast<size_t>(f.at(v))]), c.at(v));
    if (d1_g_->contains(CubeMap(c.n, std::move(g)))) return true;
  }
  return false;
}

std::vector<CubeMap> HZkStructure::enumerate(int n, const Budget& budget) const {
  std::vector<CubeMap> zs = dk_z_->enumerate(n, budget);
  std::vector<CubeMap> gs = d1_g_->enumerate(n, budget);
  budget.require(static_cast<uint64_t>(zs.size()) * gs.size() * vertex_count(n),
                 "enumerate C^" + std::to_string(n) + " of " + describe());
  std::vector<CubeMap> out;
  std::unordered_set<std::string> seen;
  std::vector<int> vals(vertex_count(n));
  for (const CubeMap& f : zs)
    for (const CubeMap& g : gs) {
      for (uint32_t v = 0; v < vals.size(); ++v)
        vals[v] = group_.op(zsub_.to_parent[static_cast<size_t>(f.at(v))], g.at(v));
      CubeMap cube(n, vals);
      if (seen.insert(cube_key(cube)).second) out.push_back(std::move(cube));
    }
  std::sort(out.begin(), out.end(), [](const CubeMap& a, const CubeMap& b) { return a.values < b.values; });
  return out;
}

// ---------------------------------------------------------------------------
// Stored
// ---------------------------------------------------------------------------

StoredStructure::StoredStructure(int ground_size, int max_dim,
                                 std::vector<std::vector<CubeMap>> cubes_per_dim)
    : ground_(ground_size), max_dim_(max_dim), cubes_(std::move(cubes_per_dim)) {
  if (ground_ < 1) throw std::invalid_argument("stored structure: empty ground set");
  if (max_dim_ < 1) throw std::invalid_argument("stored structure: max_dim >= 1 required");
  if (cubes_.size() > static_cast<size_t>(max_dim_) + 1)
    throw std::invalid_argument("stored structure: cube sets beyond max_dim");
  cubes_.resize(static_cast<size_t>(max_dim_) + 1);

  // C^0 is the ground set and C^1 all pairs; fill when omitted, verify
  // otherwise.
  if (cubes_[0].empty())
    for (int x = 0; x < ground_; ++x) cubes_[0].push_back(CubeMap(0, {x}));
  if (cubes_[1].empty())
    for (int x = 0; x < ground_; ++x)
      for (int y = 0; y < ground_; ++y) cubes_[1].push_back(CubeMap(1, {x, y}));
  if (cubes_[0].size() != static_cast<size_t>(ground_))
    throw std::invalid_argument("stored structure: C^0 must equal the ground set");
  if (cubes_[1].size() != static_cast<size_t>(ground_) * static_cast<size_t>(ground_))
    throw std::invalid_argument("stored structure: C^1 must contain all pairs");

  keys_.resize(cubes_.size());
  for (size_t d = 0; d < cubes_.size(); ++d) {
    for (const CubeMap& c : cubes_[d]) {
      if (c.n != static_cast<int>(d))
        throw std::invalid_argument("stored structure: cube filed under the wrong dimension");
      check_point_range(c);
      keys_[d].insert(cube_key(c));
    }
    if (keys_[d].size() != cubes_[d].size())
      throw std::invalid_argument("stored structure: duplicate cubes in C^" + std::to_string(d));
  }
}

std::string StoredStructure::describe() const {
  return "stored(ground " + std::to_string(ground_) + ", max_dim " + std::to_string(max_dim_) + ")";
}

bool StoredStructure::contains(const CubeMap& c) const {
  check_point_range(c);
  if (c.n > max_dim_)
    throw std::invalid_argument("stored structure: membership queried above max_dim");
  return keys_[static_cast<size_t>(c.n)].count(cube_key(c)) > 0;
}

std::vector<CubeMap> StoredStructure::enumerate(int n, const Budget&) const {
  if (n > max_dim_)
    throw std::invalid_argument("stored structure: enumeration queried above max_dim");
  return cubes_[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// General systems and simplicial gluing
// ---------------------------------------------------------------------------

int general_cube_value(const GroupTable& g, const std::vector<std::array<int, 2>>& a, uint32_t v) {
  int x = g.id;
  for (size_t i = 0; i < a.size(); ++i) x = g.op(x, a[i][coord(v, static_cast<int>(i) + 1)]);
  return x;
}

SimpleForm general_to_simple(const GroupTable& g, const std::vector<std::array<int, 2>>& a) {
  SimpleForm s;
  s.c = g.id;
  for (const auto& row : a) {
    // c' a_{n,0}, h_i' conjugated by a_{n,0}, and h_n = a_{n,0}^{-1} a_{n,1}.
    for (int& h : s.h) h = g.conj(h, row[0]);
    s.c = g.op(s.c, row[0]);
    s.h.push_back(g.op(g.invert(row[0]), row[1]));
  }
  const int n = static_cast<int>(a.size());
  for (uint32_t v = 0; v < vertex_count(n); ++v) {
    int lhs = general_cube_value(g, a, v);
    int rhs = s.c;
    for (int i = 1; i <= n; ++i)
      if (coord(v, i)) rhs = g.op(rhs, s.h[static_cast<size_t>(i - 1)]);
    if (lhs != rhs) throw std::logic_error("general_to_simple: vertex verification failed");
  }
  return s;
}

CubeMap glue_simplicial(const CubeStructure& x, const SimplicialSet& s, const std::vector<int>& values) {
  if (values.size() != s.members.size())
    throw std::invalid_argument("glue_simplicial: one value per member required");
  const int n = s.n;
  std::vector<int> total(vertex_count(n), -1);
  for (size_t i = 0; i < s.members.size(); ++i) total[s.members[i]] = values[i];

  // Expand u in {0,1}^{h(v)} onto the support of v.
  auto expand = [&](uint32_t u, uint32_t v) {
    uint32_t out = 0;
    int rank = 0;
    for (int i = 1; i <= n; ++i)
      if (coord(v, i)) {
        if (coord(u, ++rank)) out |= 1u << (i - 1);
      }
    return out;
  };

  // Cube preservation on maximal members (lower members follow).
  for (uint32_t v : s.maximal()) {
    const int h = height(v);
    std::vector<int> sub(vertex_count(h));
    for (uint32_t u = 0; u < sub.size(); ++u) sub[u] = total[expand(u, v)];
    if (!x.contains(CubeMap(h, std::move(sub))))
      throw std::invalid_argument("glue_simplicial: map is not cube preserving at vertex " +
                                  vertex_to_string(n, v));
  }

  // Fill the complement in height order; each new vertex is the top of a
  // corner whose lower data is already present.
  std::vector<uint32_t> todo;
  for (uint32_t v = 0; v < vertex_count(n); ++v)
    if (total[v] < 0) todo.push_back(v);
  std::stable_sort(todo.begin(), todo.end(),
                   [](uint32_t a, uint32_t b) { return height(a) < height(b); });
  for (uint32_t v : todo) {
    const int h = height(v);
    std::vector<int> corner_vals(vertex_count(h) - 1);
    for (uint32_t u = 0; u + 1 < vertex_count(h); ++u) corner_vals[u] = total[expand(u, v)];
    std::vector<int> xs = x.completion_values(Corner(h, std::move(corner_vals)));
    if (xs.empty())
      throw std::invalid_argument("glue_simplicial: no completion at vertex " + vertex_to_string(n, v));
    total[v] = xs[0];
  }
  return CubeMap(n, std::move(total));
}

}  // namespace cubelab
