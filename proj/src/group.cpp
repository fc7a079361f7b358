#include "cubelab/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cubelab {

namespace {

constexpr int kAssocCheckLimit = 64;

int table_order(const std::vector<int>& mult) {
  auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(mult.size()))));
  if (static_cast<size_t>(n) * n != mult.size())
    throw std::invalid_argument("multiplication table must be square");
  return n;
}

GroupTable build(std::vector<int> mult, std::vector<std::string> names, bool check_assoc) {
  GroupTable g;
  g.order = table_order(mult);
  if (g.order == 0) throw std::invalid_argument("group must be nonempty");
  g.mult = std::move(mult);
  for (int v : g.mult)
    if (v < 0 || v >= g.order) throw std::invalid_argument("table entry out of range");

  // Rows and columns must be permutations (cancellation laws).
  for (int a = 0; a < g.order; ++a) {
    std::vector<bool> row(static_cast<size_t>(g.order)), col(static_cast<size_t>(g.order));
    for (int b = 0; b < g.order; ++b) {
      if (row[static_cast<size_t>(g.op(a, b))])
        throw std::invalid_argument("row " + std::to_string(a) + " is not a permutation");
      if (col[static_cast<size_t>(g.op(b, a))])
        throw std::invalid_argument("column " + std::to_string(a) + " is not a permutation");
      row[static_cast<size_t>(g.op(a, b))] = true;
      col[static_cast<size_t>(g.op(b, a))] = true;
    }
  }

  g.id = -1;
  for (int e = 0; e < g.order && g.id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < g.order && ok; ++x) ok = g.op(e, x) == x && g.op(x, e) == x;
    if (ok) g.id = e;
  }
  if (g.id < 0) throw std::invalid_argument("table has no two-sided identity");

  g.inv.assign(static_cast<size_t>(g.order), -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b)
      if (g.op(a, b) == g.id && g.op(b, a) == g.id) {
        g.inv[static_cast<size_t>(a)] = b;
        break;
      }
    if (g.inv[static_cast<size_t>(a)] < 0)
      throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }

  if (check_assoc) {
    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
            throw std::invalid_argument("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
  }

  if (names.empty()) {
    for (int i = 0; i < g.order; ++i) names.push_back(std::to_string(i));
  } else if (names.size() != static_cast<size_t>(g.order)) {
    throw std::invalid_argument("names must match the group order");
  }
  g.names = std::move(names);
  return g;
}

}  // namespace

GroupTable GroupTable::checked(std::vector<int> mult_table, std::vector<std::string> names) {
  int n = table_order(mult_table);
  return build(std::move(mult_table), std::move(names), n <= kAssocCheckLimit);
}

GroupTable GroupTable::unchecked(std::vector<int> mult_table, std::vector<std::string> names) {
  return build(std::move(mult_table), std::move(names), false);
}

int GroupTable::pow(int g, int e) const {
  if (e < 0) return pow(invert(g), -e);
  int r = id;
  while (e--) r = op(r, g);
  return r;
}

int GroupTable::element_order(int g) const {
  int x = g, n = 1;
  while (x != id) {
    x = op(x, g);
    ++n;
  }
  return n;
}

GroupTable make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
  std::vector<int> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return GroupTable::checked(std::move(mult));
}

GroupTable make_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n >= 1 required");
  // Element (t, a) = s^t r^a with index t*n + a; s r^a s = r^{-a}.
  const int order = 2 * n;
  auto idx = [n](int t, int a) { return t * n + ((a % n) + n) % n; };
  std::vector<int> mult(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int t = 0; t < 2; ++t)
    for (int a = 0; a < n; ++a) names.push_back((t ? "sr" : "r") + std::to_string(a));
  for (int t1 = 0; t1 < 2; ++t1)
    for (int a1 = 0; a1 < n; ++a1)
      for (int t2 = 0; t2 < 2; ++t2)
        for (int a2 = 0; a2 < n; ++a2)
          mult[static_cast<size_t>(idx(t1, a1)) * order + idx(t2, a2)] =
              idx(t1 ^ t2, t2 ? a2 - a1 : a1 + a2);
  return GroupTable::checked(std::move(mult), std::move(names));
}

GroupTable make_symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric: n in [1,6] supported");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  std::vector<std::string> names;
  for (int i = 0; i < order; ++i) {
    index[perms[static_cast<size_t>(i)]] = i;
    std::string s;
    for (int v : perms[static_cast<size_t>(i)]) s += static_cast<char>('0' + v);
    names.push_back(s);
  }
  // (a*b)(x) = a(b(x)).
  std::vector<int> mult(static_cast<size_t>(order) * order);
  std::vector<int> comp(static_cast<size_t>(n));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x)
        comp[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)] - 1)];
      mult[static_cast<size_t>(a) * order + b] = index[comp];
    }
  return order <= kAssocCheckLimit ? GroupTable::checked(std::move(mult), std::move(names))
                                   : GroupTable::unchecked(std::move(mult), std::move(names));
}

GroupTable make_quaternion8() {
  // Indices: 1,-1,i,-i,j,-j,k,-k as 2*unit + (negative ? 1 : 0).
  static const int unit_mult[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<int> mult(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * unit_sign[ua][ub];
      mult[static_cast<size_t>(a) * 8 + b] = 2 * unit_mult[ua][ub] + (sign < 0 ? 1 : 0);
    }
  return GroupTable::checked(std::move(mult), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int order = a.order * b.order;
  auto idx = [&](int x, int y) { return x * b.order + y; };
  std::vector<int> mult(static_cast<size_t>(order) * order);
  std::vector<std::string> names;
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          mult[static_cast<size_t>(idx(x1, y1)) * order + idx(x2, y2)] = idx(a.op(x1, x2), b.op(y1, y2));
  return order <= kAssocCheckLimit ? GroupTable::checked(std::move(mult), std::move(names))
                                   : GroupTable::unchecked(std::move(mult), std::move(names));
}

GroupTable make_named_group(const std::string& kind, int n) {
  if (kind == "cyclic") return make_cyclic(n);
  if (kind == "dihedral") return make_dihedral(n);
  if (kind == "symmetric") return make_symmetric(n);
  if (kind == "quaternion8") return make_quaternion8();
  throw std::invalid_argument("unknown group kind: " + kind);
}

bool is_abelian(const GroupTable& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

std::vector<int> center(const GroupTable& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

bool is_subgroup(const GroupTable& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<bool> in(static_cast<size_t>(g.order), false);
  for (int x : subset) {
    if (x < 0 || x >= g.order) return false;
    in[static_cast<size_t>(x)] = true;
  }
  if (!in[static_cast<size_t>(g.id)]) return false;
  for (int a : subset) {
    if (!in[static_cast<size_t>(g.invert(a))]) return false;
    for (int b : subset)
      if (!in[static_cast<size_t>(g.op(a, b))]) return false;
  }
  return true;
}

bool is_central_subset(const GroupTable& g, const std::vector<int>& subset) {
  for (int z : subset)
    for (int b = 0; b < g.order; ++b)
      if (g.op(z, b) != g.op(b, z)) return false;
  return true;
}

bool is_normal(const GroupTable& g, const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::vector<bool> in(static_cast<size_t>(g.order), false);
  for (int x : subset) in[static_cast<size_t>(x)] = true;
  for (int x : subset)
    for (int h = 0; h < g.order; ++h)
      if (!in[static_cast<size_t>(g.conj(x, h))]) return false;
  return true;
}

QuotientResult quotient(const GroupTable& g, const std::vector<int>& normal_subgroup) {
  if (!is_normal(g, normal_subgroup))
    throw std::invalid_argument("quotient: subset is not a normal subgroup");
  QuotientResult r;
  r.class_of.assign(static_cast<size_t>(g.order), -1);
  for (int x = 0; x < g.order; ++x) {
    if (r.class_of[static_cast<size_t>(x)] >= 0) continue;
    int cls = static_cast<int>(r.classes.size());
    std::vector<int> coset;
    for (int n : normal_subgroup) coset.push_back(g.op(x, n));
    std::sort(coset.begin(), coset.end());
    for (int y : coset) r.class_of[static_cast<size_t>(y)] = cls;
    r.classes.push_back(std::move(coset));
  }
  const int q = static_cast<int>(r.classes.size());
  std::vector<int> mult(static_cast<size_t>(q) * q);
  std::vector<std::string> names;
  for (int c = 0; c < q; ++c) names.push_back("[" + g.name(r.classes[static_cast<size_t>(c)][0]) + "]");
  for (int c1 = 0; c1 < q; ++c1)
    for (int c2 = 0; c2 < q; ++c2)
      mult[static_cast<size_t>(c1) * q + c2] =
          r.class_of[static_cast<size_t>(g.op(r.classes[static_cast<size_t>(c1)][0], r.classes[static_cast<size_t>(c2)][0]))];
  r.quotient = GroupTable::checked(std::move(mult), std::move(names));
  return r;
}

SubgroupResult subgroup_table(const GroupTable& g, const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) throw std::invalid_argument("subgroup_table: subset is not a subgroup");
  SubgroupResult r;
  r.to_parent = subset;
  std::sort(r.to_parent.begin(), r.to_parent.end());
  r.from_parent.assign(static_cast<size_t>(g.order), -1);
  const int m = static_cast<int>(r.to_parent.size());
  for (int i = 0; i < m; ++i) r.from_parent[static_cast<size_t>(r.to_parent[static_cast<size_t>(i)])] = i;
  std::vector<int> mult(static_cast<size_t>(m) * m);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back(g.name(r.to_parent[static_cast<size_t>(i)]));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mult[static_cast<size_t>(i) * m + j] =
          r.from_parent[static_cast<size_t>(g.op(r.to_parent[static_cast<size_t>(i)], r.to_parent[static_cast<size_t>(j)]))];
  r.sub = GroupTable::checked(std::move(mult), std::move(names));
  return r;
}

namespace {

// Greedy generating sequence: repeatedly add an element outside the
// generated subgroup, recording for each element one expression as
// (previous element) * (generator).
struct GeneratorData {
  std::vector<int> gens;
  std::vector<int> parent;   // element -> previous element, -1 for id
  std::vector<int> via_gen;  // element -> generator index used
  std::vector<int> bfs_order;
};

GeneratorData generating_sequence(const GroupTable& g) {
  GeneratorData d;
  d.parent.assign(static_cast<size_t>(g.order), -2);
  d.via_gen.assign(static_cast<size_t>(g.order), -1);
  d.parent[static_cast<size_t>(g.id)] = -1;
  d.bfs_order.push_back(g.id);
  while (static_cast<int>(d.bfs_order.size()) < g.order) {
    int next_gen = -1;
    for (int x = 0; x < g.order; ++x)
      if (d.parent[static_cast<size_t>(x)] == -2) {
        next_gen = x;
        break;
      }
    d.gens.push_back(next_gen);
    // Close under right-multiplication by all generators so far.
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t i = 0; i < d.bfs_order.size(); ++i) {
        int x = d.bfs_order[i];
        for (size_t gj = 0; gj < d.gens.size(); ++gj) {
          int y = g.op(x, d.gens[gj]);
          if (d.parent[static_cast<size_t>(y)] == -2) {
            d.parent[static_cast<size_t>(y)] = x;
            d.via_gen[static_cast<size_t>(y)] = static_cast<int>(gj);
            d.bfs_order.push_back(y);
            grew = true;
          }
        }
      }
    }
  }
  return d;
}

bool try_images(const GroupTable& a, const GroupTable& b, const GeneratorData& d,
                const std::vector<int>& gen_images, std::vector<int>& out) {
  std::vector<int> img(static_cast<size_t>(a.order), -1);
  img[static_cast<size_t>(a.id)] = b.id;
  for (int x : d.bfs_order) {
    if (x == a.id) continue;
    int p = d.parent[static_cast<size_t>(x)];
    img[static_cast<size_t>(x)] = b.op(img[static_cast<size_t>(p)], gen_images[static_cast<size_t>(d.via_gen[static_cast<size_t>(x)])]);
  }
  std::vector<bool> used(static_cast<size_t>(b.order), false);
  for (int x = 0; x < a.order; ++x) {
    if (used[static_cast<size_t>(img[static_cast<size_t>(x)])]) return false;
    used[static_cast<size_t>(img[static_cast<size_t>(x)])] = true;
  }
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < a.order; ++y)
      if (img[static_cast<size_t>(a.op(x, y))] != b.op(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]))
        return false;
  out = std::move(img);
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order != b.order) return std::nullopt;
  std::vector<int> oa, ob;
  for (int x = 0; x < a.order; ++x) oa.push_back(a.element_order(x));
  for (int x = 0; x < b.order; ++x) ob.push_back(b.element_order(x));
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  if (is_abelian(a) != is_abelian(b)) return std::nullopt;
  if (center(a).size() != center(b).size()) return std::nullopt;

  GeneratorData d = generating_sequence(a);
  const size_t k = d.gens.size();
  std::vector<std::vector<int>> candidates(k);
  for (size_t i = 0; i < k; ++i)
    for (int y = 0; y < b.order; ++y)
      if (ob[static_cast<size_t>(y)] == oa[static_cast<size_t>(d.gens[i])]) candidates[i].push_back(y);

  std::vector<int> gen_images(k), result;
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == k) return try_images(a, b, d, gen_images, result);
    for (int y : candidates[i]) {
      gen_images[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0)) return result;
  return std::nullopt;
}

}  // namespace cubelab
