#include "cubelab/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubelab {

namespace {

// Drop coordinate i (1-based) from a vertex of {0,1}^{n+1}.
inline uint32_t drop_coord(uint32_t v, int i) {
  const uint32_t low = (1u << (i - 1)) - 1;
  return (v & low) | ((v >> 1) & ~low);
}

}  // namespace

bool composable(const CubeMap& c1, const CubeMap& c2, int j) {
  if (c1.n != c2.n) return false;
  return face(c1, j, 1) == face(c2, j, 0);
}

CubeMap compose_cubes(const CubeStructure& x, const CubeMap& c1, const CubeMap& c2, int j) {
  if (!x.contains(c1) || !x.contains(c2))
    throw std::invalid_argument("compose_cubes: inputs must be cubes");
  if (!composable(c1, c2, j)) throw std::invalid_argument("compose_cubes: faces do not match");
  std::vector<int> vals(vertex_count(c1.n));
  for (uint32_t v = 0; v < vals.size(); ++v) vals[v] = coord(v, j) ? c2.at(v) : c1.at(v);
  CubeMap result(c1.n, std::move(vals));
  if (!x.contains(result))
    throw std::runtime_error("compose_cubes: glued map is not a cube (face gluing fails here)");
  return result;
}

bool approx_equivalent(const CubeStructure& x, const CubeMap& c1, const CubeMap& c2, int i) {
  if (c1.n != c2.n) throw std::invalid_argument("approx_equivalent: dimension mismatch");
  if (i < 1 || i > c1.n + 1) throw std::invalid_argument("approx_equivalent: face index out of range");
  std::vector<int> vals(vertex_count(c1.n + 1));
  for (uint32_t v = 0; v < vals.size(); ++v) {
    uint32_t w = drop_coord(v, i);
    vals[v] = coord(v, i) ? c2.at(w) : c1.at(w);
  }
  return x.contains(CubeMap(c1.n + 1, std::move(vals)));
}

int CubeClasses::class_of(const CubeMap& c) const {
  auto it = index_of.find(cube_key(c));
  if (it == index_of.end()) throw std::invalid_argument("class_of: map is not an enumerated cube");
  return partition.class_of[static_cast<size_t>(it->second)];
}

CubeClasses approx_classes(const CubeStructure& x, int n, int i, const Budget& budget) {
  CubeClasses result;
  result.n = n;
  result.i = i;
  result.cubes = x.enumerate(n, budget);
  const size_t count = result.cubes.size();
  budget.require(count * count / 2 * vertex_count(n + 1), "pairwise opposite-face tests");
  for (size_t a = 0; a < count; ++a) result.index_of[cube_key(result.cubes[a])] = static_cast<int>(a);

  UnionFind uf(static_cast<int>(count));
  std::vector<char> related(count * count, 0);
  for (size_t a = 0; a < count; ++a) {
    related[a * count + a] = 1;
    for (size_t b = a + 1; b < count; ++b) {
      bool eq = approx_equivalent(x, result.cubes[a], result.cubes[b], i);
      related[a * count + b] = related[b * count + a] = eq ? 1 : 0;
      if (eq) uf.unite(static_cast<int>(a), static_cast<int>(b));
    }
  }
  result.partition = Partition::from_union_find(uf);
  // The pairwise relation must already be transitive; a mismatch against the
  // union-find closure means the structure violates the face-gluing law.
  for (size_t a = 0; a < count; ++a)
    for (size_t b = 0; b < count; ++b)
      if ((related[a * count + b] != 0) !=
          result.partition.same(static_cast<int>(a), static_cast<int>(b)))
        throw std::runtime_error("approx_classes: opposite-face relation is not transitive");
  return result;
}

Partition sim_relation(const CubeStructure& x, int i, const Budget& budget) {
  const int size = x.size();
  budget.require(static_cast<uint64_t>(size) * size * vertex_count(i + 1), "point relation tests");
  UnionFind uf(size);
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b) {
      CubeMap fwd = CubeMap::constant(i + 1, b);
      fwd.values[top_vertex(i + 1)] = a;
      CubeMap bwd = CubeMap::constant(i + 1, a);
      bwd.values[top_vertex(i + 1)] = b;
      bool ab = x.contains(fwd), ba = x.contains(bwd);
      if (ab != ba) throw std::runtime_error("sim_relation: relation is not symmetric");
      if (ab) uf.unite(a, b);
    }
  return Partition::from_union_find(uf);
}

FactorStructure quotient_structure(const CubeStructure& x, int i, int dim_cap, const Budget& budget) {
  FactorStructure f;
  f.classes = sim_relation(x, i, budget);
  std::vector<std::vector<CubeMap>> cubes(static_cast<size_t>(dim_cap) + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    std::unordered_set<std::string> seen;
    for (const CubeMap& c : x.enumerate(n, budget)) {
      std::vector<int> vals(c.values.size());
      for (size_t v = 0; v < vals.size(); ++v)
        vals[v] = f.classes.class_of[static_cast<size_t>(c.values[v])];
      CubeMap image(n, std::move(vals));
      if (seen.insert(cube_key(image)).second) cubes[static_cast<size_t>(n)].push_back(std::move(image));
    }
  }
  f.structure = std::make_shared<StoredStructure>(f.classes.num_classes(), dim_cap, std::move(cubes));
  return f;
}

bool is_k_step(const CubeStructure& x, int k, const Budget& budget) {
  CompletionScanResult scan = completion_scan(x, k + 1, budget);
  return scan.status == CheckStatus::Pass && scan.unique;
}

bool is_k_ergodic(const CubeStructure& x, int k, const Budget& budget) {
  const uint64_t total = sat_pow(static_cast<uint64_t>(x.size()), vertex_count(k));
  budget.require(total * vertex_count(k), "ergodicity sweep");
  std::vector<int> vals(vertex_count(k));
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int& v : vals) {
      v = static_cast<int>(c % static_cast<uint64_t>(x.size()));
      c /= static_cast<uint64_t>(x.size());
    }
    if (!x.contains(CubeMap(k, vals))) return false;
  }
  return true;
}

std::vector<Fiber> fibers(const CubeStructure& x, int k, int dim_cap, const Budget& budget) {
  if (dim_cap < k + 1) throw std::invalid_argument("fibers: dim_cap must be at least k+1");
  if (!is_k_step(x, k, budget)) throw std::runtime_error("fibers: structure is not k-step at k=" + std::to_string(k));
  Partition part = sim_relation(x, k - 1, budget);

  std::vector<std::vector<std::vector<CubeMap>>> per_fiber(
      static_cast<size_t>(part.num_classes()),
      std::vector<std::vector<CubeMap>>(static_cast<size_t>(dim_cap) + 1));
  std::vector<std::vector<int>> reindex(static_cast<size_t>(part.num_classes()),
                                        std::vector<int>(static_cast<size_t>(x.size()), -1));
  for (int cls = 0; cls < part.num_classes(); ++cls)
    for (size_t j = 0; j < part.classes[static_cast<size_t>(cls)].size(); ++j)
      reindex[static_cast<size_t>(cls)][static_cast<size_t>(part.classes[static_cast<size_t>(cls)][j])] =
          static_cast<int>(j);

  for (int n = 0; n <= dim_cap; ++n) {
    for (const CubeMap& c : x.enumerate(n, budget)) {
      int cls = part.class_of[static_cast<size_t>(c.values[0])];
      bool inside = true;
      for (int v : c.values) inside = inside && part.class_of[static_cast<size_t>(v)] == cls;
      if (!inside) continue;
      std::vector<int> vals(c.values.size());
      for (size_t v = 0; v < vals.size(); ++v)
        vals[v] = reindex[static_cast<size_t>(cls)][static_cast<size_t>(c.values[v])];
      per_fiber[static_cast<size_t>(cls)][static_cast<size_t>(n)].push_back(CubeMap(n, std::move(vals)));
    }
  }

  std::vector<Fiber> out;
  for (int cls = 0; cls < part.num_classes(); ++cls) {
    Fiber f;
    f.members = part.classes[static_cast<size_t>(cls)];
    f.structure = std::make_shared<StoredStructure>(static_cast<int>(f.members.size()), dim_cap,
                                                    std::move(per_fiber[static_cast<size_t>(cls)]));
    AxiomReport report = check_axioms(*f.structure, dim_cap, budget);
    if (!report.all_pass())
      throw std::runtime_error("fibers: inherited structure fails the axiom suite");
    if (report.k_ergodic < k || !report.step || *report.step > k)
      throw std::runtime_error("fibers: inherited structure is not k-step k-ergodic");
    out.push_back(std::move(f));
  }
  return out;
}

GroupTable recover_group(const CubeStructure& x, const Budget& budget) {
  if (!is_k_step(x, 1, budget)) throw std::runtime_error("recover_group: structure is not 1-step");
  const int size = x.size();
  const int e = 0;  // base element: least index
  std::vector<int> mult(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      std::vector<int> xs = x.completion_values(Corner(2, {e, a, b}));
      if (xs.size() != 1) throw std::runtime_error("recover_group: completion not unique");
      mult[static_cast<size_t>(a) * size + b] = xs[0];
    }
  GroupTable g = GroupTable::checked(std::move(mult));
  if (g.id != e) throw std::runtime_error("recover_group: recovered identity is not the base element");
  for (int a = 0; a < size; ++a) {
    std::vector<int> xs = x.completion_values(Corner(2, {a, e, e}));
    if (xs.size() != 1 || xs[0] != g.invert(a))
      throw std::runtime_error("recover_group: inverse completion mismatch");
  }
  // The recovered 1-step cubes must be exactly the squares of x.
  D1Structure recovered(g);
  std::unordered_set<std::string> lhs, rhs;
  for (const CubeMap& c : x.enumerate(2, budget)) lhs.insert(cube_key(c));
  for (const CubeMap& c : recovered.enumerate(2, budget)) rhs.insert(cube_key(c));
  if (lhs != rhs) throw std::runtime_error("recover_group: C^2 sets differ from the recovered group's");
  return g;
}

namespace {

// The glue operation on opposite-face classes along coordinate j, computed
// from representatives via the reflection trick; the representative at the
// top vertex is searched so that the partner lands in the requested class.
std::vector<std::vector<int>> class_operation(const CubeStructure& f, const CubeClasses& classes,
                                              int k, int j, bool verify_rep_independence) {
  const int ny = classes.partition.num_classes();
  const int size = f.size();
  std::vector<std::vector<int>> op(static_cast<size_t>(ny), std::vector<int>(static_cast<size_t>(ny), -1));
  CubeMorphism rj = reflection(k, j);
  auto compute = [&](int ca, int cb, size_t rep_rank) -> int {
    const auto& members = classes.partition.classes[static_cast<size_t>(ca)];
    const CubeMap& c1 = classes.cubes[static_cast<size_t>(members[rep_rank % members.size()])];
    CubeMap partner = pullback(c1, rj);
    for (int t = 0; t < size; ++t) {
      partner.values[top_vertex(k)] = t;
      if (classes.class_of(partner) == cb) return classes.class_of(compose_cubes(f, c1, partner, j));
    }
    throw std::runtime_error("class_operation: no composable representative found");
  };
  for (int a = 0; a < ny; ++a)
    for (int b = 0; b < ny; ++b) {
      op[static_cast<size_t>(a)][static_cast<size_t>(b)] = compute(a, b, 0);
      if (verify_rep_independence &&
          classes.partition.classes[static_cast<size_t>(a)].size() > 1 &&
          compute(a, b, 1) != op[static_cast<size_t>(a)][static_cast<size_t>(b)])
        throw std::runtime_error("class_operation: result depends on the representative");
    }
  return op;
}

}  // namespace

AbelianRecovery recover_abelian(const CubeStructure& f, int k, int base_point, const Budget& budget,
                                int face_index) {
  if (k < 2) throw std::invalid_argument("recover_abelian: k >= 2 required");
  if (face_index < 1 || face_index > k + 1)
    throw std::invalid_argument("recover_abelian: face index out of range");
  if (base_point < 0 || base_point >= f.size())
    throw std::invalid_argument("recover_abelian: base point outside the ground set");
  if (!is_k_step(f, k, budget)) throw std::runtime_error("recover_abelian: structure is not k-step");
  if (!is_k_ergodic(f, k, budget)) throw std::runtime_error("recover_abelian: structure is not k-ergodic");

  AbelianRecovery rec;
  rec.k = k;
  rec.base_point = base_point;
  rec.classes = approx_classes(f, k, face_index, budget);
  const int size = f.size();
  const int ny = rec.classes.partition.num_classes();
  if (ny != size)
    throw std::runtime_error("recover_abelian: class count differs from the ground set size");

  // psi: x -> class of the cube equal to x at 0^k and base elsewhere.
  rec.psi.assign(static_cast<size_t>(size), -1);
  rec.psi_inv.assign(static_cast<size_t>(ny), -1);
  for (int x = 0; x < size; ++x) {
    CubeMap q = CubeMap::constant(k, base_point);
    q.values[0] = x;
    int cls = rec.classes.class_of(q);
    rec.psi[static_cast<size_t>(x)] = cls;
    if (rec.psi_inv[static_cast<size_t>(cls)] >= 0)
      throw std::runtime_error("recover_abelian: psi is not injective");
    rec.psi_inv[static_cast<size_t>(cls)] = x;
  }

  rec.class_op = class_operation(f, rec.classes, k, 1, true);
  rec.identity_class = rec.classes.class_of(CubeMap::constant(k, base_point));
  for (int a = 0; a < ny; ++a)
    if (rec.class_op[static_cast<size_t>(a)][static_cast<size_t>(rec.identity_class)] != a ||
        rec.class_op[static_cast<size_t>(rec.identity_class)][static_cast<size_t>(a)] != a)
      throw std::runtime_error("recover_abelian: constant-cube class is not a unit");

  // All gluing directions must induce the same commutative operation.
  for (int j = 1; j <= k; ++j) {
    auto opj = j == 1 ? rec.class_op : class_operation(f, rec.classes, k, j, false);
    for (int a = 0; a < ny; ++a)
      for (int b = 0; b < ny; ++b) {
        if (opj[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
            rec.class_op[static_cast<size_t>(a)][static_cast<size_t>(b)])
          throw std::runtime_error("recover_abelian: gluing directions disagree");
        if (opj[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
            opj[static_cast<size_t>(b)][static_cast<size_t>(a)])
          throw std::runtime_error("recover_abelian: class operation is not commutative");
      }
  }

  // Pull the group back to the ground set.
  std::vector<int> mult(static_cast<size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      mult[static_cast<size_t>(a) * size + b] = rec.psi_inv[static_cast<size_t>(
          rec.class_op[static_cast<size_t>(rec.psi[static_cast<size_t>(a)])]
                      [static_cast<size_t>(rec.psi[static_cast<size_t>(b)])])];
  rec.group = GroupTable::checked(std::move(mult));
  if (rec.group.id != base_point)
    throw std::runtime_error("recover_abelian: identity is not the base point");
  if (!is_abelian(rec.group)) throw std::runtime_error("recover_abelian: recovered group not abelian");

  // Sign law for near-constant cubes at other vertices.
  std::vector<int> inv_class(static_cast<size_t>(ny));
  for (int a = 0; a < ny; ++a)
    for (int b = 0; b < ny; ++b)
      if (rec.class_op[static_cast<size_t>(a)][static_cast<size_t>(b)] == rec.identity_class)
        inv_class[static_cast<size_t>(a)] = b;
  for (uint32_t w = 0; w < vertex_count(k); ++w)
    for (int x = 0; x < size; ++x) {
      CubeMap q = CubeMap::constant(k, base_point);
      q.values[w] = x;
      int expected = height(w) % 2 == 0 ? rec.psi[static_cast<size_t>(x)]
                                        : inv_class[static_cast<size_t>(rec.psi[static_cast<size_t>(x)])];
      if (rec.classes.class_of(q) != expected)
        throw std::runtime_error("recover_abelian: sign law fails");
    }

  // The class of a cube is its alternating vertex sum in the recovered group.
  for (size_t idx = 0; idx < rec.classes.cubes.size(); ++idx) {
    const CubeMap& c = rec.classes.cubes[idx];
    if (rec.psi_inv[static_cast<size_t>(rec.classes.partition.class_of[idx])] !=
        alternating_sum(rec.group, c))
      throw std::runtime_error("recover_abelian: alternating-sum law fails");
  }

  return rec;
}

int fiber_action_by_class(const CubeStructure& f, const AbelianRecovery& rec, int class_id, int x) {
  if (class_id < 0 || class_id >= rec.classes.partition.num_classes())
    throw std::invalid_argument("fiber_action_by_class: unknown class");
  int found = -1;
  CubeMap c = CubeMap::constant(rec.k, x);
  for (int t = 0; t < f.size(); ++t) {
    c.values[0] = t;
    if (rec.classes.class_of(c) == class_id) {
      if (found >= 0) throw std::runtime_error("fiber_action_by_class: action is not free");
      found = t;
    }
  }
  if (found < 0) throw std::runtime_error("fiber_action_by_class: no cube in the class");
  return found;
}

int fiber_action(const CubeStructure& f, const AbelianRecovery& rec, int a, int x) {
  if (a < 0 || a >= static_cast<int>(rec.psi.size()))
    throw std::invalid_argument("fiber_action: point outside the fiber's group");
  return fiber_action_by_class(f, rec, rec.psi[static_cast<size_t>(a)], x);
}

ActionCheck verify_fiber_action(const CubeStructure& f, int k, const Budget& budget) {
  ActionCheck check;
  AbelianRecovery rec = recover_abelian(f, k, 0, budget);
  const int size = f.size();
  const int ny = rec.classes.partition.num_classes();

  check.identity_ok = true;
  for (int x = 0; x < size; ++x)
    check.identity_ok = check.identity_ok && fiber_action_by_class(f, rec, rec.identity_class, x) == x;

  check.composition_ok = true;
  for (int a = 0; a < ny && check.composition_ok; ++a)
    for (int b = 0; b < ny && check.composition_ok; ++b)
      for (int x = 0; x < size && check.composition_ok; ++x)
        check.composition_ok =
            fiber_action_by_class(f, rec, b, fiber_action_by_class(f, rec, a, x)) ==
            fiber_action_by_class(f, rec, rec.class_op[static_cast<size_t>(a)][static_cast<size_t>(b)], x);

  check.free_transitive_ok = true;
  for (int x = 0; x < size && check.free_transitive_ok; ++x) {
    std::vector<bool> hit(static_cast<size_t>(size), false);
    for (int a = 0; a < ny; ++a) hit[static_cast<size_t>(fiber_action_by_class(f, rec, a, x))] = true;
    for (bool h : hit) check.free_transitive_ok = check.free_transitive_ok && h;
  }

  // The composite x -> x + psi^{-1}(class) must agree with the direct search
  // for every recovery base point.
  check.base_point_independent = true;
  std::vector<AbelianRecovery> recs;
  recs.push_back(std::move(rec));
  if (size > 1) recs.push_back(recover_abelian(f, k, 1, budget));
  for (const AbelianRecovery& r : recs)
    for (int y = 0; y < ny && check.base_point_independent; ++y)
      for (int x = 0; x < size && check.base_point_independent; ++x)
        check.base_point_independent =
            fiber_action_by_class(f, r, y, x) ==
            r.group.op(x, r.psi_inv[static_cast<size_t>(y)]);
  return check;
}

bool verify_fiber_transport(const CubeStructure& x, const Fiber& fa, const Fiber& fb, int k,
                            const Budget& budget) {
  CubeClasses ca = approx_classes(*fa.structure, k, 1, budget);
  CubeClasses cb = approx_classes(*fb.structure, k, 1, budget);
  auto lift = [&](const Fiber& f, const CubeMap& c) {
    std::vector<int> vals(c.values.size());
    for (size_t v = 0; v < vals.size(); ++v)
      vals[v] = f.members[static_cast<size_t>(c.values[v])];
    return CubeMap(c.n, std::move(vals));
  };
  const int na = ca.partition.num_classes(), nb = cb.partition.num_classes();
  if (na != nb) return false;
  std::vector<int> mapping(static_cast<size_t>(na), -1);
  for (size_t ia = 0; ia < ca.cubes.size(); ++ia)
    for (size_t ib = 0; ib < cb.cubes.size(); ++ib) {
      if (!approx_equivalent(x, lift(fa, ca.cubes[ia]), lift(fb, cb.cubes[ib]), 1)) continue;
      int clsa = ca.partition.class_of[ia], clsb = cb.partition.class_of[ib];
      if (mapping[static_cast<size_t>(clsa)] < 0)
        mapping[static_cast<size_t>(clsa)] = clsb;
      else if (mapping[static_cast<size_t>(clsa)] != clsb)
        return false;  // not well defined on classes
    }
  std::vector<bool> image(static_cast<size_t>(nb), false);
  for (int m : mapping) {
    if (m < 0 || image[static_cast<size_t>(m)]) return false;
    image[static_cast<size_t>(m)] = true;
  }
  auto opa = class_operation(*fa.structure, ca, k, 1, false);
  auto opb = class_operation(*fb.structure, cb, k, 1, false);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (mapping[static_cast<size_t>(opa[static_cast<size_t>(a)][static_cast<size_t>(b)])] !=
          opb[static_cast<size_t>(mapping[static_cast<size_t>(a)])]
             [static_cast<size_t>(mapping[static_cast<size_t>(b)])])
        return false;
  return true;
}

StructureTower structure_tower(const CubeStructure& x, int k_cap, int dim_cap, const Budget& budget) {
  if (k_cap < 1) throw std::invalid_argument("structure_tower: k_cap >= 1 required");
  StructureTower tower;
  for (int i = 1; i <= k_cap; ++i) {
    TowerLevel lvl;
    lvl.level = i;
    FactorStructure fs = quotient_structure(x, i, dim_cap, budget);
    lvl.classes = fs.classes;
    lvl.factor = fs.structure;
    if (i == 1) {
      lvl.group = recover_group(*lvl.factor, budget);
      lvl.abelian = is_abelian(lvl.group);
      lvl.num_fibers = 1;
    } else {
      std::vector<Fiber> fbs = fibers(*lvl.factor, i, dim_cap, budget);
      lvl.num_fibers = static_cast<int>(fbs.size());
      std::vector<AbelianRecovery> recs;
      for (const Fiber& f : fbs) recs.push_back(recover_abelian(*f.structure, i, 0, budget));
      lvl.group = recs[0].group;
      lvl.abelian = true;
      for (size_t a = 0; a < fbs.size(); ++a)
        for (size_t b = a + 1; b < fbs.size(); ++b) {
          if (!is_isomorphic(recs[a].group, recs[b].group)) lvl.fibers_isomorphic = false;
          if (!verify_fiber_transport(*lvl.factor, fbs[a], fbs[b], i, budget))
            lvl.transport_bijection_ok = false;
        }
    }
    tower.levels.push_back(std::move(lvl));
  }

  // Projection compatibility: the level-i classes refine the level-l classes
  // for l < i, and factoring through any intermediate level agrees.
  tower.projections_compatible = true;
  const int points = x.size();
  for (size_t hi = 0; hi < tower.levels.size(); ++hi)
    for (size_t lo = 0; lo < hi; ++lo) {
      const Partition& ph = tower.levels[hi].classes;
      const Partition& pl = tower.levels[lo].classes;
      std::vector<int> proj(static_cast<size_t>(ph.num_classes()), -1);
      for (int p = 0; p < points; ++p) {
        int ch = ph.class_of[static_cast<size_t>(p)], cl = pl.class_of[static_cast<size_t>(p)];
        if (proj[static_cast<size_t>(ch)] < 0)
          proj[static_cast<size_t>(ch)] = cl;
        else if (proj[static_cast<size_t>(ch)] != cl)
          tower.projections_compatible = false;  // level-hi classes do not refine level-lo
      }
      for (size_t mid = lo + 1; mid < hi; ++mid) {
        const Partition& pm = tower.levels[mid].classes;
        for (int p = 0; p < points; ++p) {
          int via_mid = pl.class_of[static_cast<size_t>(pm.classes[static_cast<size_t>(
              pm.class_of[static_cast<size_t>(p)])][0])];
          if (via_mid != pl.class_of[static_cast<size_t>(p)]) tower.projections_compatible = false;
        }
      }
    }
  return tower;
}

std::optional<TranspositionWitness> find_transposition_witness(const CubeStructure& x, int max_dim,
                                                               const Budget& budget) {
  for (int n = 2; n <= max_dim; ++n) {
    std::vector<CubeMap> cubes = x.enumerate(n, budget);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CubeMorphism t = transposition(n, i, j);
        for (const CubeMap& c : cubes)
          if (!x.contains(pullback(c, t))) return TranspositionWitness{n, i, j, c};
      }
  }
  return std::nullopt;
}

}  // namespace cubelab
