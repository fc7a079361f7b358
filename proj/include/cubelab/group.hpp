#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cubelab {

// A finite group as a multiplication table over element indices 0..order-1.
// mult[a*order+b] is the product a*b (the row index acts on the left). The
// identity is recorded but not required to be index 0. Group laws are
// verified at construction; the O(order^3) associativity sweep can be
// skipped for large tables via GroupTable::unchecked (unsafe).
struct GroupTable {
  int order = 0;
  int id = 0;
  std::vector<int> mult;
  std::vector<int> inv;
  std::vector<std::string> names;

  GroupTable() = default;
  static GroupTable checked(std::vector<int> mult_table, std::vector<std::string> names = {});
  static GroupTable unchecked(std::vector<int> mult_table, std::vector<std::string> names = {});

  int op(int a, int b) const { return mult[static_cast<size_t>(a) * order + b]; }
  int invert(int a) const { return inv[static_cast<size_t>(a)]; }
  // g^h = h^{-1} g h
  int conj(int g, int h) const { return op(op(invert(h), g), h); }
  int commutator(int a, int b) const { return op(op(invert(a), invert(b)), op(a, b)); }
  int pow(int g, int e) const;
  int element_order(int g) const;
  const std::string& name(int i) const { return names[static_cast<size_t>(i)]; }
};

GroupTable make_cyclic(int n);
GroupTable make_dihedral(int n);     // order 2n
GroupTable make_symmetric(int n);    // order n!, names are one-line images
GroupTable make_quaternion8();
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// Dispatch by kind name: cyclic | dihedral | symmetric | quaternion8.
GroupTable make_named_group(const std::string& kind, int n);

bool is_abelian(const GroupTable& g);
std::vector<int> center(const GroupTable& g);
bool is_subgroup(const GroupTable& g, const std::vector<int>& subset);
bool is_central_subset(const GroupTable& g, const std::vector<int>& subset);
bool is_normal(const GroupTable& g, const std::vector<int>& subset);

struct QuotientResult {
  GroupTable quotient;                  // one element per coset
  std::vector<int> class_of;            // element -> coset index
  std::vector<std::vector<int>> classes;  // cosets ordered by least member
};
// Quotient by a normal subgroup; throws if the subset is not one.
QuotientResult quotient(const GroupTable& g, const std::vector<int>& normal_subgroup);

struct SubgroupResult {
  GroupTable sub;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};
SubgroupResult subgroup_table(const GroupTable& g, const std::vector<int>& subset);

// Isomorphism search: invariant prefilter (order profile, abelian flag,
// center size), then backtracking over images of a generating sequence.
std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b);
inline bool is_isomorphic(const GroupTable& a, const GroupTable& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace cubelab
