#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cubelab/algebra.hpp"
#include "support.hpp"

using namespace cubelab;

namespace {
const Budget kBudget;
}

TEST_CASE("axiom suite on 1-step structures") {
  D1Structure d1(make_symmetric(3));
  AxiomReport r = check_axioms(d1, 3, kBudget);
  CHECK(r.all_pass());
  CHECK(r.presheaf == CheckStatus::Pass);
  CHECK(r.ergodicity == CheckStatus::Pass);
  REQUIRE(r.step.has_value());
  CHECK(*r.step == 1);
  CHECK(r.k_ergodic == 1);
}

TEST_CASE("axiom suite on degree-2 structures") {
  DkStructure d2(make_cyclic(2), 2);
  AxiomReport r = check_axioms(d2, 3, kBudget);
  CHECK(r.all_pass());
  REQUIRE(r.step.has_value());
  CHECK(*r.step == 2);
  CHECK(r.k_ergodic == 2);
  REQUIRE(r.step_witness.has_value());
  CHECK(r.step_witness->completions >= 2);
}

TEST_CASE("an added junk cube breaks the presheaf axiom with a replayable witness") {
  D1Structure d1(make_cyclic(2));
  std::vector<std::vector<CubeMap>> cubes(3);
  for (int n = 0; n <= 2; ++n) cubes[static_cast<size_t>(n)] = d1.enumerate(n, kBudget);
  cubes[2].push_back(CubeMap(2, {0, 0, 0, 1}));  // not closed under reflections
  StoredStructure padded(2, 2, std::move(cubes));
  AxiomReport r = check_axioms(padded, 2, kBudget);
  CHECK(r.presheaf == CheckStatus::Fail);
  REQUIRE(r.presheaf_witness.has_value());
  CHECK_FALSE(padded.contains(pullback(r.presheaf_witness->cube, r.presheaf_witness->phi)));
}

TEST_CASE("category parameter: the dihedral product passes the narrow suite, fails the wide one") {
  GroupTable d6 = make_dihedral(6);
  HZkStructure h(d6, center(d6), 2);
  AxiomReport narrow = check_axioms(h, 2, kBudget);
  CHECK(narrow.presheaf == CheckStatus::Pass);
  CHECK(narrow.ergodicity == CheckStatus::Pass);
  AxiomReport wide = check_axioms(h, 2, kBudget, Category::N);
  CHECK(wide.presheaf == CheckStatus::Fail);
  REQUIRE(wide.presheaf_witness.has_value());
  CHECK_FALSE(h.contains(pullback(wide.presheaf_witness->cube, wide.presheaf_witness->phi)));
}

TEST_CASE("a deleted cube breaks the completion axiom with a witness") {
  D1Structure d1(make_cyclic(2));
  std::vector<std::vector<CubeMap>> cubes(3);
  for (int n = 0; n <= 2; ++n) cubes[static_cast<size_t>(n)] = d1.enumerate(n, kBudget);
  auto& c2 = cubes[2];
  CubeMap removed = c2.back();
  c2.pop_back();
  StoredStructure broken(2, 2, std::move(cubes));
  AxiomReport r = check_axioms(broken, 2, kBudget);
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.completion.size() == 1);
  CHECK(r.completion[0].status == CheckStatus::Fail);
  REQUIRE(r.completion[0].witness.has_value());
  CHECK(r.completion[0].witness->completions == 0);
  // The witness corner is exactly the removed cube minus its top value.
  const Corner& w = r.completion[0].witness->corner;
  for (uint32_t v = 0; v < 3; ++v) CHECK(w.at(v) == removed.at(v));
}

TEST_CASE("cube composition") {
  GroupTable z4 = make_cyclic(4);
  D1Structure d1(z4);

  // Dimension 1: (a,b) and (b,c) glue to (a,c).
  CubeMap glued = compose_cubes(d1, CubeMap(1, {1, 2}), CubeMap(1, {2, 3}), 1);
  CHECK(glued == CubeMap(1, {1, 3}));

  // c with its own reflection: the glue is reflection symmetric.
  CubeMap c = d1.simple_cube({1, 2, 3}, 2);
  CubeMap cr = pullback(c, reflection(2, 1));
  CHECK(composable(c, cr, 1));
  CubeMap sym = compose_cubes(d1, c, cr, 1);
  CHECK(pullback(sym, reflection(2, 1)) == sym);
  CHECK(face(sym, 1, 0) == face(sym, 1, 1));

  // Associativity along the same direction.
  CubeMap c1 = d1.simple_cube({0, 1, 2}, 2);
  CubeMap c2 = compose_cubes(d1, c1, pullback(c1, reflection(2, 1)), 1);
  CubeMap c3 = c1;
  // Make (c1,c2) and (c2,c3) composable chains via matching faces.
  CubeMap left = compose_cubes(d1, compose_cubes(d1, c1, pullback(c1, reflection(2, 1)), 1),
                               c1, 1);
  CubeMap right = compose_cubes(d1, c1, compose_cubes(d1, pullback(c1, reflection(2, 1)), c1, 1), 1);
  CHECK(left == right);
  (void)c2;
  (void)c3;

  CHECK_THROWS(compose_cubes(d1, CubeMap(1, {1, 2}), CubeMap(1, {3, 3}), 1));
}

TEST_CASE("opposite-face classes") {
  // Degree-2 over Z2 at n=2: classes are indexed by the alternating sum.
  DkStructure d2(make_cyclic(2), 2);
  CubeClasses cc = approx_classes(d2, 2, 1, kBudget);
  CHECK(cc.partition.num_classes() == 2);
  GroupTable z2 = make_cyclic(2);
  for (size_t idx = 0; idx < cc.cubes.size(); ++idx) {
    int w = alternating_sum(z2, cc.cubes[idx]);
    CHECK(cc.partition.class_of[idx] == cc.class_of(CubeMap(2, {w == 0 ? 0 : 1, 0, 0, 0})));
  }

  // Reflexivity via the projection pullback.
  D1Structure d1(make_symmetric(3));
  CubeMap c = d1.simple_cube({2, 4, 5}, 2);
  CubeMap cyl = pullback(c, projection(3, {1, 2}));
  CHECK(cyl.n == 3);
  CHECK(d1.contains(cyl));
  CHECK(approx_equivalent(d1, c, c, 1));

  // 1-step structures at n=1: (a,b) ~ (c,d) iff the 2-map is a square.
  GroupTable s3 = make_symmetric(3);
  CubeClasses pairs = approx_classes(d1, 1, 1, kBudget);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int cc2 = 0; cc2 < 6; ++cc2)
        for (int dd = 0; dd < 6; ++dd) {
          bool related = pairs.class_of(CubeMap(1, {a, b})) == pairs.class_of(CubeMap(1, {cc2, dd}));
          bool lowcube = d1.contains(CubeMap(2, {a, cc2, b, dd}));
          CHECK(related == lowcube);
        }
}

TEST_CASE("point relations and factors") {
  // Level 0 merges everything.
  D1Structure d1(make_symmetric(3));
  Partition p0 = sim_relation(d1, 0, kBudget);
  CHECK(p0.num_classes() == 1);

  // A 1-step structure has singleton classes at level 1.
  Partition p1 = sim_relation(d1, 1, kBudget);
  CHECK(p1.num_classes() == 6);

  // The product structure's level-1 classes are the central cosets.
  GroupTable q8 = make_quaternion8();
  HZkStructure h(q8, center(q8), 2);
  Partition ph = sim_relation(h, 1, kBudget);
  QuotientResult q = quotient(q8, center(q8));
  CHECK(ph.classes == q.classes);

  // Factors: by level 0 a point; D1 by level 1 is itself; H by level 1
  // matches the 1-step structure of the central quotient.
  FactorStructure f0 = quotient_structure(d1, 0, 2, kBudget);
  CHECK(f0.structure->size() == 1);
  FactorStructure f1 = quotient_structure(d1, 1, 3, kBudget);
  CHECK(f1.structure->size() == 6);
  std::set<std::string> orig, fact;
  for (const CubeMap& c : d1.enumerate(3, kBudget)) orig.insert(cube_key(c));
  for (const CubeMap& c : f1.structure->enumerate(3, kBudget)) fact.insert(cube_key(c));
  // Classes are numbered by least member, which here is the identity map.
  CHECK(orig == fact);

  FactorStructure fh = quotient_structure(h, 1, 3, kBudget);
  D1Structure d1q(q.quotient);
  for (int n = 0; n <= 3; ++n) {
    std::set<std::string> a, b;
    for (const CubeMap& c : fh.structure->enumerate(n, kBudget)) a.insert(cube_key(c));
    for (const CubeMap& c : d1q.enumerate(n, kBudget)) b.insert(cube_key(c));
    CHECK(a == b);
  }
}

TEST_CASE("fibers of 2-step structures") {
  // At k=1 there is a single fiber carrying the whole structure.
  std::vector<Fiber> whole = fibers(D1Structure(make_symmetric(3)), 1, 3, kBudget);
  CHECK(whole.size() == 1);
  CHECK(whole[0].structure->size() == 6);

  DkStructure d2z4(make_cyclic(4), 2);
  std::vector<Fiber> single = fibers(d2z4, 2, 3, kBudget);
  CHECK(single.size() == 1);
  CHECK(single[0].structure->size() == 4);

  GroupTable q8 = make_quaternion8();
  HZkStructure h(q8, center(q8), 2);
  std::vector<Fiber> fs = fibers(h, 2, 3, kBudget);
  CHECK(fs.size() == 4);
  for (const Fiber& f : fs) {
    CHECK(f.members.size() == 2);
    CHECK(is_k_ergodic(*f.structure, 2, kBudget));
    CHECK(is_k_step(*f.structure, 2, kBudget));
  }
}

TEST_CASE("group recovery from 1-step structures") {
  GroupTable s3 = make_symmetric(3);
  GroupTable rec = recover_group(D1Structure(s3), kBudget);
  CHECK(rec.id == 0);
  CHECK(is_isomorphic(rec, s3));

  GroupTable z2 = make_cyclic(2);
  CHECK(is_isomorphic(recover_group(D1Structure(z2), kBudget), z2));

  CHECK_THROWS(recover_group(DkStructure(make_cyclic(2), 2), kBudget));
}

TEST_CASE("abelian recovery from 2-step 2-ergodic structures") {
  AbelianRecovery r4 = recover_abelian(DkStructure(make_cyclic(4), 2), 2, 0, kBudget);
  CHECK(is_isomorphic(r4.group, make_cyclic(4)));
  CHECK(r4.group.id == 0);
  // Over the degree structure on an abelian group the recovered operation is
  // the original one (base point 0).
  GroupTable z4 = make_cyclic(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(r4.group.op(a, b) == z4.op(a, b));

  GroupTable v4 = direct_product(make_cyclic(2), make_cyclic(2));
  AbelianRecovery rv = recover_abelian(DkStructure(v4, 2), 2, 0, kBudget);
  CHECK(is_isomorphic(rv.group, v4));

  // The recovered group does not depend on which opposite-face relation the
  // classes use.
  for (int face = 1; face <= 3; ++face) {
    AbelianRecovery ri = recover_abelian(DkStructure(make_cyclic(4), 2), 2, 0, kBudget, face);
    CHECK(ri.group.mult == r4.group.mult);
  }

  CHECK_THROWS(recover_abelian(D1Structure(make_cyclic(4)), 2, 0, kBudget));
}

TEST_CASE("interchange law on classes (exhaustive, small)") {
  for (int order : {2, 3}) {
    DkStructure d2(make_cyclic(order), 2);
    AbelianRecovery rec = recover_abelian(d2, 2, 0, kBudget);
    const auto& op = rec.class_op;
    const int ny = rec.classes.partition.num_classes();
    for (int a = 0; a < ny; ++a)
      for (int b = 0; b < ny; ++b)
        for (int c = 0; c < ny; ++c)
          for (int d = 0; d < ny; ++d) {
            int lhs = op[static_cast<size_t>(op[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                        [static_cast<size_t>(op[static_cast<size_t>(c)][static_cast<size_t>(d)])];
            int rhs = op[static_cast<size_t>(op[static_cast<size_t>(a)][static_cast<size_t>(c)])]
                        [static_cast<size_t>(op[static_cast<size_t>(b)][static_cast<size_t>(d)])];
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("reflection-symmetric cubes are equivalent to the constant cube") {
  DkStructure d2(make_cyclic(2), 2);
  AbelianRecovery rec = recover_abelian(d2, 2, 0, kBudget);
  for (const CubeMap& c : d2.enumerate(2, kBudget))
    for (int j = 1; j <= 2; ++j)
      if (pullback(c, reflection(2, j)) == c)
        CHECK(rec.classes.class_of(c) == rec.identity_class);
}

TEST_CASE("composition respects the opposite-face classes (exhaustive, small)") {
  DkStructure d2(make_cyclic(2), 2);
  auto cubes = d2.enumerate(2, kBudget);
  for (int i = 1; i <= 3; ++i) {
    CubeClasses cc = approx_classes(d2, 2, i, kBudget);
    for (int j = 1; j <= 2; ++j)
      for (const CubeMap& c1 : cubes)
        for (const CubeMap& c2 : cubes) {
          if (!composable(c1, c2, j)) continue;
          for (const CubeMap& c1p : cubes)
            for (const CubeMap& c2p : cubes) {
              if (!composable(c1p, c2p, j)) continue;
              if (cc.class_of(c1) != cc.class_of(c1p) || cc.class_of(c2) != cc.class_of(c2p))
                continue;
              CHECK(cc.class_of(compose_cubes(d2, c1, c2, j)) ==
                    cc.class_of(compose_cubes(d2, c1p, c2p, j)));
            }
        }
  }
}

TEST_CASE("pointwise equivalent replacements stay cubes; low agreement propagates") {
  GroupTable q8 = make_quaternion8();
  HZkStructure h(q8, center(q8), 2);
  Partition sim = sim_relation(h, 1, kBudget);
  SplitMix64 rng(17);

  // Replace every vertex by an equivalent point: still a cube (n = 2).
  auto c2 = h.enumerate(2, kBudget);
  for (int trial = 0; trial < 200; ++trial) {
    const CubeMap& c = c2[rng.uniform_index(static_cast<uint32_t>(c2.size()))];
    CubeMap mutated = c;
    for (auto& v : mutated.values) {
      const auto& cls = sim.classes[static_cast<size_t>(sim.class_of[static_cast<size_t>(v)])];
      v = cls[rng.uniform_index(static_cast<uint32_t>(cls.size()))];
    }
    CHECK(h.contains(mutated));
  }

  // Cubes agreeing classwise on the height<=1 hull agree classwise everywhere
  // (n = 3).
  auto c3 = h.enumerate(3, kBudget);
  int found = 0;
  while (found < 200) {
    const CubeMap& a = c3[rng.uniform_index(static_cast<uint32_t>(c3.size()))];
    const CubeMap& b = c3[rng.uniform_index(static_cast<uint32_t>(c3.size()))];
    bool low_agree = true;
    for (uint32_t v = 0; v < 8 && low_agree; ++v)
      if (height(v) <= 1) low_agree = sim.same(a.at(v), b.at(v));
    if (!low_agree) continue;
    ++found;
    for (uint32_t v = 0; v < 8; ++v) CHECK(sim.same(a.at(v), b.at(v)));
  }
}

TEST_CASE("structure towers") {
  // 1-step: G1 is the group itself, level 2 is trivial.
  GroupTable s3 = make_symmetric(3);
  StructureTower t1 = structure_tower(D1Structure(s3), 2, 3, kBudget);
  CHECK(t1.projections_compatible);
  REQUIRE(t1.levels.size() == 2);
  CHECK(is_isomorphic(t1.levels[0].group, s3));
  CHECK(t1.levels[1].group.order == 1);

  // Degree-2: G1 trivial, G2 the group.
  StructureTower t2 = structure_tower(DkStructure(make_cyclic(4), 2), 2, 3, kBudget);
  CHECK(t2.levels[0].group.order == 1);
  CHECK(is_isomorphic(t2.levels[1].group, make_cyclic(4)));
  CHECK(t2.levels[1].abelian);

  // Product structure over Q8: G1 = Q8/Z, G2 of order 2, fibers isomorphic.
  GroupTable q8 = make_quaternion8();
  StructureTower th = structure_tower(HZkStructure(q8, center(q8), 2), 2, 3, kBudget);
  CHECK(th.projections_compatible);
  CHECK(th.levels[0].group.order == 4);
  CHECK(is_isomorphic(th.levels[0].group, direct_product(make_cyclic(2), make_cyclic(2))));
  CHECK(th.levels[1].group.order == 2);
  CHECK(th.levels[1].abelian);
  CHECK(th.levels[1].num_fibers == 4);
  CHECK(th.levels[1].fibers_isomorphic);
  CHECK(th.levels[1].transport_bijection_ok);
}

TEST_CASE("2-step 2-ergodic structures carry the degree-2 cubes of their recovered group") {
  // The recovered group lives on the structure's own ground set with the
  // base point as identity, so the cube sets must match exactly.
  auto classified = [&](const CubeStructure& f) {
    AbelianRecovery rec = recover_abelian(f, 2, 0, kBudget);
    DkStructure model(rec.group, 2);
    for (int n = 0; n <= 3; ++n) {
      std::set<std::string> lhs, rhs;
      for (const CubeMap& c : f.enumerate(n, kBudget)) lhs.insert(cube_key(c));
      for (const CubeMap& c : model.enumerate(n, kBudget)) rhs.insert(cube_key(c));
      if (lhs != rhs) return false;
    }
    return true;
  };
  CHECK(classified(DkStructure(make_cyclic(4), 2)));
  CHECK(classified(DkStructure(direct_product(make_cyclic(2), make_cyclic(2)), 2)));
  GroupTable q8 = make_quaternion8();
  HZkStructure h(q8, center(q8), 2);
  for (const Fiber& f : fibers(h, 2, 3, kBudget)) CHECK(classified(*f.structure));
}

TEST_CASE("the canonical fiber action") {
  DkStructure d2z4(make_cyclic(4), 2);
  ActionCheck check = verify_fiber_action(d2z4, 2, kBudget);
  CHECK(check.identity_ok);
  CHECK(check.composition_ok);
  CHECK(check.free_transitive_ok);
  CHECK(check.base_point_independent);

  // Translation: with base 0 the action of a at x is x + a.
  AbelianRecovery rec = recover_abelian(d2z4, 2, 0, kBudget);
  GroupTable z4 = make_cyclic(4);
  for (int a = 0; a < 4; ++a)
    for (int x = 0; x < 4; ++x) CHECK(fiber_action(d2z4, rec, a, x) == z4.op(x, a));
  CHECK(fiber_action(d2z4, rec, 1, 2) == 3);

  // On each fiber of the Q8 product structure.
  GroupTable q8 = make_quaternion8();
  HZkStructure h(q8, center(q8), 2);
  for (const Fiber& f : fibers(h, 2, 3, kBudget)) {
    ActionCheck fc = verify_fiber_action(*f.structure, 2, kBudget);
    CHECK(fc.all());
  }
}
