#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubelab/cube_map.hpp"
#include "cubelab/morphism.hpp"
#include "cubelab/structure.hpp"

namespace cubelab {

enum class CheckStatus { Pass, Fail, SkippedBudget };

std::string to_string(CheckStatus s);

struct PresheafWitness {
  CubeMorphism phi;
  CubeMap cube;  // cube whose pullback along phi is not a cube
};

struct CornerWitness {
  Corner corner;
  int completions = 0;  // 0 for a completion failure, >= 2 for non-uniqueness
};

struct DimCheck {
  int n = 0;
  CheckStatus status = CheckStatus::SkippedBudget;
  uint64_t corners_checked = 0;
  std::optional<CornerWitness> witness;
};

// Result of the axiom suite: every verdict is relative to dim_cap; nothing
// is claimed beyond the enumerated dimensions.
struct AxiomReport {
  int dim_cap = 0;
  CheckStatus presheaf = CheckStatus::SkippedBudget;
  std::optional<PresheafWitness> presheaf_witness;
  CheckStatus ergodicity = CheckStatus::SkippedBudget;
  std::vector<DimCheck> completion;  // one entry per dimension 2..dim_cap
  std::optional<int> step;           // smallest k with unique (k+1)-completions, if within cap
  std::optional<CornerWitness> step_witness;  // non-uniqueness witness at step+1 when step known
  int k_ergodic = 1;                 // largest k <= dim_cap with C^k = X^{2^k}
  bool consistency_pass = true;      // face/restriction determinacy cross-checks
  std::vector<std::string> notes;

  bool all_pass() const;
};

// Exhaustive axiom verification up to dim_cap: presheaf over every rule-based
// morphism in the given category with source/target dims <= dim_cap,
// ergodicity, corner completion (existence and completion counts) per
// dimension, step detection, and the largest verified ergodicity degree.
AxiomReport check_axioms(const CubeStructure& x, int dim_cap, const Budget& budget,
                         Category cat = Category::G);

// Exhaustive corner sweep at one dimension: every corner with cube faces is
// completed; reports existence failures, completion-count uniqueness, and
// witnesses for both.
struct CompletionScanResult {
  CheckStatus status = CheckStatus::Pass;  // completion axiom at this dimension
  uint64_t corners_checked = 0;
  bool unique = true;
  std::optional<CornerWitness> existence_witness;
  std::optional<CornerWitness> uniqueness_witness;
};
CompletionScanResult completion_scan(const CubeStructure& x, int n, const Budget& budget);

}  // namespace cubelab
