#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cubelab/axioms.hpp"
#include "cubelab/partition.hpp"
#include "cubelab/structure.hpp"

namespace cubelab {

// Whether c1 and c2 can be glued along coordinate j (the (j,1)-face of c1
// equals the (j,0)-face of c2).
bool composable(const CubeMap& c1, const CubeMap& c2, int j);

// The glued cube c1 [+]_j c2; checks both inputs, composability, and that
// the result is again a cube.
CubeMap compose_cubes(const CubeStructure& x, const CubeMap& c1, const CubeMap& c2, int j);

// Whether c1 and c2 are opposite i-faces of some (n+1)-cube; one membership
// test on the combined map.
bool approx_equivalent(const CubeStructure& x, const CubeMap& c1, const CubeMap& c2, int i);

// The partition of C^n(X) into opposite-face equivalence classes.
struct CubeClasses {
  int n = 0;
  int i = 1;
  std::vector<CubeMap> cubes;
  Partition partition;
  std::unordered_map<std::string, int> index_of;

  int class_of(const CubeMap& c) const;
};
CubeClasses approx_classes(const CubeStructure& x, int n, int i, const Budget& budget);

// The point relation at level i: x ~ y iff the map with x at the top vertex
// of {0,1}^{i+1} and y everywhere else is a cube.
Partition sim_relation(const CubeStructure& x, int i, const Budget& budget);

// The level-i factor: class map plus the push-forward structure, stored
// explicitly up to dim_cap.
struct FactorStructure {
  Partition classes;
  std::shared_ptr<StoredStructure> structure;
};
FactorStructure quotient_structure(const CubeStructure& x, int i, int dim_cap, const Budget& budget);

// Whether completion at dimension k+1 exists and is unique for every corner.
bool is_k_step(const CubeStructure& x, int k, const Budget& budget);
// Whether every map {0,1}^k -> X is a cube.
bool is_k_ergodic(const CubeStructure& x, int k, const Budget& budget);

// The level-(k-1) classes of a k-step structure, each with the inherited
// cube structure (re-indexed ground set) and verified axioms.
struct Fiber {
  std::vector<int> members;  // fiber index -> point of x
  std::shared_ptr<StoredStructure> structure;
};
std::vector<Fiber> fibers(const CubeStructure& x, int k, int dim_cap, const Budget& budget);

// Group recovery from a 1-step structure: products and inverses are unique
// corner completions over a fixed base element (the least index). Validates
// the group laws and that the recovered 1-step cubes coincide with C^2(X).
GroupTable recover_group(const CubeStructure& x, const Budget& budget);

// Abelian group recovery from a k-step k-ergodic structure (k >= 2):
// classes of C^k(X) under the opposite-face relation at i=1 form a group
// under gluing; the group is pulled back to X through the class of the
// near-constant cube at the base point. Construction verifies: all gluing
// directions induce the same commutative operation (Eckmann-Hilton), the
// sign law for the near-constant cubes at other vertices, and the
// alternating-sum formula for the class map.
struct AbelianRecovery {
  GroupTable group;  // on X's ground set, identity = base_point
  int k = 0;
  int base_point = 0;
  CubeClasses classes;
  std::vector<int> psi;                    // point -> class id
  std::vector<int> psi_inv;                // class id -> point
  std::vector<std::vector<int>> class_op;  // the glue operation on classes
  int identity_class = 0;
};
AbelianRecovery recover_abelian(const CubeStructure& f, int k, int base_point, const Budget& budget,
                                int face_index = 1);

// x^y for a class y: the value at 0^k of the cube equal to x off 0^k lying
// in class y. Requires exactly one such cube (freeness).
int fiber_action_by_class(const CubeStructure& f, const AbelianRecovery& rec, int class_id, int x);
// Point-parametrized action via psi.
int fiber_action(const CubeStructure& f, const AbelianRecovery& rec, int a, int x);

struct ActionCheck {
  bool identity_ok = false;
  bool composition_ok = false;
  bool free_transitive_ok = false;
  bool base_point_independent = false;
  bool all() const { return identity_ok && composition_ok && free_transitive_ok && base_point_independent; }
};
// Full verification of the canonical action on a k-step k-ergodic structure.
ActionCheck verify_fiber_action(const CubeStructure& f, int k, const Budget& budget);

struct TowerLevel {
  int level = 0;
  Partition classes;                          // ~_level on the points of x
  std::shared_ptr<StoredStructure> factor;    // X_level
  GroupTable group;                           // structure group G_level
  bool abelian = false;
  int num_fibers = 0;
  bool fibers_isomorphic = true;
  bool transport_bijection_ok = true;
};

struct StructureTower {
  std::vector<TowerLevel> levels;  // levels 1..k_cap
  bool projections_compatible = false;
};

StructureTower structure_tower(const CubeStructure& x, int k_cap, int dim_cap, const Budget& budget);

// Pairwise class transport between two fibers along the opposite-face
// relation in the ambient structure: the induced class map must be a
// bijective homomorphism for the glue operations.
bool verify_fiber_transport(const CubeStructure& x, const Fiber& fa, const Fiber& fb, int k,
                            const Budget& budget);

struct TranspositionWitness {
  int n = 0;
  int i = 0;
  int j = 0;
  CubeMap cube;
};
// Search for a cube whose coordinate-swap pullback is not a cube. Returns
// nullopt when all transposition pullbacks up to max_dim stay cubes.
std::optional<TranspositionWitness> find_transposition_witness(const CubeStructure& x, int max_dim,
                                                               const Budget& budget);

}  // namespace cubelab
