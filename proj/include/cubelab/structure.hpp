#pragma once

#include <array>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "cubelab/budget.hpp"
#include "cubelab/cube_map.hpp"
#include "cubelab/group.hpp"
#include "cubelab/simplicial.hpp"

namespace cubelab {

// A cube structure: a ground set {0,...,size-1} with designated cube sets
// C^n. Membership is exact; enumeration is exhaustive and deduplicated.
class CubeStructure {
 public:
  virtual ~CubeStructure() = default;

  virtual int size() const = 0;
  virtual std::string describe() const = 0;
  virtual bool contains(const CubeMap& c) const = 0;
  virtual std::vector<CubeMap> enumerate(int n, const Budget& budget) const = 0;

  // All values x for which extending the corner by x at the top vertex gives
  // a cube. Throws if some lower face of the corner is not a cube (the
  // message names the offending face index).
  std::vector<int> completion_values(const Corner& f) const;
  std::vector<CubeMap> complete_corner(const Corner& f) const;

 protected:
  void check_point_range(const CubeMap& c) const;
};

// The 1-step structure on a group: cubes v -> a_0 * prod a_i^{v_i}.
class D1Structure : public CubeStructure {
 public:
  explicit D1Structure(GroupTable g);

  int size() const override { return group_.order; }
  std::string describe() const override;
  bool contains(const CubeMap& c) const override;
  std::vector<CubeMap> enumerate(int n, const Budget& budget) const override;

  // The simple cube with the given parameters (a_0, a_1, ..., a_n).
  CubeMap simple_cube(const std::vector<int>& params, int n) const;
  const GroupTable& group() const { return group_; }

 private:
  GroupTable group_;
};

// The degree-k structure on an abelian group: cubes are the maps whose
// alternating sums over all simplicial sub-cubes of height > k vanish.
class DkStructure : public CubeStructure {
 public:
  DkStructure(GroupTable abelian, int k);

  int size() const override { return group_.order; }
  std::string describe() const override;
  bool contains(const CubeMap& c) const override;
  std::vector<CubeMap> enumerate(int n, const Budget& budget) const override;

  int degree() const { return k_; }
  const GroupTable& group() const { return group_; }

 private:
  GroupTable group_;
  int k_;
};

// Products of degree-k cubes in a central subgroup Z with 1-step cubes of G.
class HZkStructure : public CubeStructure {
 public:
  HZkStructure(GroupTable g, std::vector<int> central_subgroup, int k);

  int size() const override { return group_.order; }
  std::string describe() const override;
  bool contains(const CubeMap& c) const override;
  std::vector<CubeMap> enumerate(int n, const Budget& budget) const override;

  // Slow existential oracle over explicit factorizations, for cross-checks.
  bool contains_by_search(const CubeMap& c, const Budget& budget) const;

  const GroupTable& group() const { return group_; }
  const std::vector<int>& central_subgroup() const { return z_; }
  const QuotientResult& mod_z() const { return quot_; }
  int degree() const { return k_; }

 private:
  GroupTable group_;
  std::vector<int> z_;
  int k_;
  SubgroupResult zsub_;
  QuotientResult quot_;
  std::unique_ptr<DkStructure> dk_z_;
  std::unique_ptr<D1Structure> d1_g_;
  std::unique_ptr<D1Structure> d1_q_;
};

// An explicitly stored structure with cube sets for dimensions 0..max_dim.
// Membership above max_dim is an error. C^0 must be the ground set and C^1
// all pairs; both are auto-filled when omitted.
class StoredStructure : public CubeStructure {
 public:
  StoredStructure(int ground_size, int max_dim, std::vector<std::vector<CubeMap>> cubes_per_dim);

  int size() const override { return ground_; }
  std::string describe() const override;
  bool contains(const CubeMap& c) const override;
  std::vector<CubeMap> enumerate(int n, const Budget& budget) const override;

  int max_dim() const { return max_dim_; }

 private:
  int ground_;
  int max_dim_;
  std::vector<std::vector<CubeMap>> cubes_;
  std::vector<std::unordered_set<std::string>> keys_;
};

// Conversion of a two-sided system a_{i,j} into simple form: elements c and
// h_1..h_n with prod_i a_{i,v_i} = c * prod_i h_i^{v_i} for all v, found by
// the inductive conjugation rewrite and verified at every vertex.
struct SimpleForm {
  int c = 0;
  std::vector<int> h;
};
SimpleForm general_to_simple(const GroupTable& g, const std::vector<std::array<int, 2>>& a);

// The vertex map of the general system at v, prod_i a_{i, v_i}.
int general_cube_value(const GroupTable& g, const std::vector<std::array<int, 2>>& a, uint32_t v);

// Extends a cube-preserving map on a simplicial set to a full cube, filling
// missing vertices in height order via corner completion.
CubeMap glue_simplicial(const CubeStructure& x, const SimplicialSet& s, const std::vector<int>& values);

// Alternating vertex sum in an abelian group (the w functional).
int alternating_sum(const GroupTable& abelian, const CubeMap& c);

}  // namespace cubelab
