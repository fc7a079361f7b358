#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cubelab/group.hpp"
#include "support.hpp"

using namespace cubelab;

TEST_CASE("cyclic groups") {
  GroupTable z1 = make_cyclic(1);
  CHECK(z1.order == 1);
  CHECK(z1.id == 0);

  GroupTable z6 = make_cyclic(6);
  CHECK(z6.order == 6);
  CHECK(is_abelian(z6));
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.invert(2) == 4);
}

TEST_CASE("symmetric group vs direct permutation composition") {
  GroupTable s3 = make_symmetric(3);
  CHECK(s3.order == 6);
  CHECK_FALSE(is_abelian(s3));

  // Oracle: compose the one-line names directly ((a*b)(x) = a(b(x))).
  auto apply_name = [&](const std::string& name, int x) { return name[static_cast<size_t>(x)] - '1'; };
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const std::string &na = s3.name(a), &nb = s3.name(b);
      std::string composed;
      for (int x = 0; x < 3; ++x)
        composed += static_cast<char>('1' + apply_name(na, apply_name(nb, x)));
      CHECK(s3.name(s3.op(a, b)) == composed);
    }
}

TEST_CASE("quaternion group: center and quotient") {
  GroupTable q8 = make_quaternion8();
  CHECK(q8.order == 8);
  CHECK_FALSE(is_abelian(q8));
  CHECK(q8.element_order(2) == 4);  // i
  CHECK(q8.op(2, 4) == 6);          // i*j = k
  CHECK(q8.op(4, 2) == 7);          // j*i = -k

  std::vector<int> z = center(q8);
  CHECK(z == std::vector<int>{0, 1});  // {1, -1}

  QuotientResult q = quotient(q8, z);
  CHECK(q.quotient.order == 4);
  // Classify by element orders: every nonidentity element has order 2.
  for (int x = 0; x < 4; ++x)
    if (x != q.quotient.id) CHECK(q.quotient.element_order(x) == 2);
  CHECK(is_isomorphic(q.quotient, direct_product(make_cyclic(2), make_cyclic(2))));
}

TEST_CASE("center of an abelian group is everything") {
  GroupTable a = direct_product(make_cyclic(2), make_cyclic(3));
  std::vector<int> z = center(a);
  CHECK(static_cast<int>(z.size()) == a.order);
}

TEST_CASE("quotient classes are cosets ordered by least member") {
  GroupTable z6 = make_cyclic(6);
  QuotientResult q = quotient(z6, {0, 3});
  CHECK(q.classes == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(q.class_of == std::vector<int>{0, 1, 2, 0, 1, 2});
  CHECK_THROWS(quotient(z6, {0, 4}));  // not a subgroup

  GroupTable s3 = make_symmetric(3);
  std::vector<int> not_normal;
  for (int x = 0; x < 6; ++x)
    if (x == s3.id || s3.element_order(x) == 2) {
      not_normal.push_back(x);
      if (not_normal.size() == 2) break;
    }
  CHECK_THROWS(quotient(s3, not_normal));
}

TEST_CASE("table validation rejects broken inputs") {
  CHECK_THROWS(GroupTable::checked({0, 1, 1, 0, 0, 1, 1, 0, 1}));  // rows not permutations
  // Latin square without associativity or two-sided identity.
  CHECK_THROWS(GroupTable::checked({
      // 5x5 "subtraction mod 5": a-b is a quasigroup, not a group
      0, 4, 3, 2, 1,
      1, 0, 4, 3, 2,
      2, 1, 0, 4, 3,
      3, 2, 1, 0, 4,
      4, 3, 2, 1, 0,
  }));
}

TEST_CASE("dihedral and products") {
  GroupTable d4 = make_dihedral(4);
  CHECK(d4.order == 8);
  CHECK_FALSE(is_abelian(d4));
  CHECK(center(d4).size() == 2);

  GroupTable d6 = make_dihedral(6);
  CHECK(d6.order == 12);
  CHECK(center(d6).size() == 2);
  // Commutators land in the rotation subgroup of index 2, not in the center.
  CHECK(d6.commutator(6, 1) != d6.id);
  CHECK_FALSE(is_central_subset(d6, {d6.commutator(6, 1)}));

  GroupTable v4 = direct_product(make_cyclic(2), make_cyclic(2));
  CHECK(v4.order == 4);
  for (int x = 0; x < 4; ++x) CHECK(v4.op(x, x) == v4.id);
}

TEST_CASE("subgroup extraction") {
  GroupTable q8 = make_quaternion8();
  SubgroupResult sub = subgroup_table(q8, {0, 1});
  CHECK(sub.sub.order == 2);
  CHECK(sub.to_parent == std::vector<int>{0, 1});
  CHECK(sub.from_parent[2] == -1);
  CHECK_THROWS(subgroup_table(q8, {0, 2, 4}));  // not closed
}

TEST_CASE("isomorphism search") {
  CHECK(is_isomorphic(make_symmetric(3), make_dihedral(3)));
  CHECK_FALSE(is_isomorphic(make_cyclic(4), direct_product(make_cyclic(2), make_cyclic(2))));
  CHECK_FALSE(is_isomorphic(make_dihedral(4), make_quaternion8()));
  CHECK(is_isomorphic(cubelab::test::make_alternating4(), cubelab::test::make_alternating4()));
  CHECK_FALSE(is_isomorphic(cubelab::test::make_alternating4(), make_dihedral(6)));
  CHECK_FALSE(is_isomorphic(cubelab::test::make_alternating4(), make_cyclic(12)));

  auto iso = find_isomorphism(make_symmetric(3), make_dihedral(3));
  REQUIRE(iso.has_value());
  GroupTable s3 = make_symmetric(3), d3 = make_dihedral(3);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK((*iso)[static_cast<size_t>(s3.op(a, b))] ==
            d3.op((*iso)[static_cast<size_t>(a)], (*iso)[static_cast<size_t>(b)]));
}

TEST_CASE("alternating group A4") {
  GroupTable a4 = cubelab::test::make_alternating4();
  CHECK(a4.order == 12);
  CHECK_FALSE(is_abelian(a4));
  std::vector<int> orders;
  for (int x = 0; x < 12; ++x) orders.push_back(a4.element_order(x));
  std::sort(orders.begin(), orders.end());
  CHECK(std::count(orders.begin(), orders.end(), 1) == 1);
  CHECK(std::count(orders.begin(), orders.end(), 2) == 3);
  CHECK(std::count(orders.begin(), orders.end(), 3) == 8);
}
