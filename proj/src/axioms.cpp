#include "cubelab/axioms.hpp"

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubelab/rng.hpp"

namespace cubelab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedBudget: return "skipped-budget";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  if (presheaf != CheckStatus::Pass || ergodicity != CheckStatus::Pass) return false;
  for (const DimCheck& d : completion)
    if (d.status != CheckStatus::Pass) return false;
  return consistency_pass;
}

namespace {

// Decode a base-|X| encoded tuple into a value vector.
void decode(uint64_t code, int base, std::vector<int>& out) {
  for (int& v : out) {
    v = static_cast<int>(code % static_cast<uint64_t>(base));
    code /= static_cast<uint64_t>(base);
  }
}

}  // namespace

CompletionScanResult completion_scan(const CubeStructure& x, int n, const Budget& budget) {
  CompletionScanResult result;
  const int size = x.size();
  const uint32_t corner_len = vertex_count(n) - 1;
  const uint64_t total = sat_pow(static_cast<uint64_t>(size), corner_len);
  budget.require(total * corner_len * static_cast<uint64_t>(n + size),
                 "completion scan at dimension " + std::to_string(n));

  std::atomic<uint64_t> checked{0};
  std::atomic<bool> failed_existence{false}, failed_unique{false};
  CornerWitness existence_w, unique_w;

#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::vector<int> vals(corner_len);
    std::vector<int> facevals(vertex_count(n - 1));
    uint64_t local_checked = 0;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (int64_t code = 0; code < static_cast<int64_t>(total); ++code) {
      decode(static_cast<uint64_t>(code), size, vals);
      bool faces_ok = true;
      for (int i = 1; i <= n && faces_ok; ++i) {
        const uint32_t low = (1u << (i - 1)) - 1;
        for (uint32_t v = 0; v < facevals.size(); ++v)
          facevals[v] = vals[(v & low) | ((v & ~low) << 1)];
        faces_ok = x.contains(CubeMap(n - 1, facevals));
      }
      if (!faces_ok) continue;
      ++local_checked;
      Corner corner(n, vals);
      int completions = 0;
      for (int xv = 0; xv < size && completions < 2; ++xv)
        if (x.contains(corner.completed_with(xv))) ++completions;
      if (completions == 0 && !failed_existence.exchange(true)) {
#ifdef _OPENMP
#pragma omp critical(existence_witness)
#endif
        {
          existence_w.corner = corner;
          existence_w.completions = 0;
        }
      }
      if (completions >= 2 && !failed_unique.exchange(true)) {
#ifdef _OPENMP
#pragma omp critical(unique_witness)
#endif
        {
          unique_w.corner = corner;
          unique_w.completions = completions;
        }
      }
    }
    checked += local_checked;
  }

  result.corners_checked = checked.load();
  if (failed_existence.load()) {
    result.status = CheckStatus::Fail;
    result.existence_witness = existence_w;
  }
  if (failed_unique.load()) {
    result.unique = false;
    result.uniqueness_witness = unique_w;
  }
  return result;
}

AxiomReport check_axioms(const CubeStructure& x, int dim_cap, const Budget& budget, Category cat) {
  AxiomReport report;
  if (const auto* stored = dynamic_cast<const StoredStructure*>(&x); stored && dim_cap > stored->max_dim()) {
    report.notes.push_back("dim_cap clamped to stored max_dim " + std::to_string(stored->max_dim()));
    dim_cap = stored->max_dim();
  }
  if (dim_cap < 2) throw std::invalid_argument("check_axioms: dim_cap >= 2 required");
  report.dim_cap = dim_cap;
  const int size = x.size();

  // Enumerated cube sets, where the budget allows.
  std::vector<std::optional<std::vector<CubeMap>>> cubes(static_cast<size_t>(dim_cap) + 1);
  for (int n = 0; n <= dim_cap; ++n) {
    try {
      cubes[static_cast<size_t>(n)] = x.enumerate(n, budget);
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(std::string("enumeration skipped: ") + e.what());
    }
  }

  // Presheaf: pullbacks of enumerated cubes along every morphism stay cubes.
  {
    bool any_skipped = false, failed = false;
    for (int m = 0; m <= dim_cap && !failed; ++m) {
      if (!cubes[static_cast<size_t>(m)]) {
        any_skipped = true;
        continue;
      }
      const auto& cs = *cubes[static_cast<size_t>(m)];
      for (int n = 0; n <= dim_cap && !failed; ++n) {
        const auto homs = enumerate_morphisms(n, m, cat);
        budget.require(cs.size() * homs.size() * vertex_count(n),
                       "presheaf scan " + std::to_string(n) + "->" + std::to_string(m));
        std::atomic<bool> bad{false};
        PresheafWitness witness;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int64_t ci = 0; ci < static_cast<int64_t>(cs.size()); ++ci) {
          if (bad.load(std::memory_order_relaxed)) continue;
          for (const CubeMorphism& phi : homs) {
            if (!x.contains(pullback(cs[static_cast<size_t>(ci)], phi))) {
              if (!bad.exchange(true)) {
#ifdef _OPENMP
#pragma omp critical(presheaf_witness)
#endif
                {
                  witness.phi = phi;
                  witness.cube = cs[static_cast<size_t>(ci)];
                }
              }
              break;
            }
          }
        }
        if (bad.load()) {
          failed = true;
          report.presheaf = CheckStatus::Fail;
          report.presheaf_witness = witness;
        }
      }
    }
    if (!failed) report.presheaf = any_skipped ? CheckStatus::SkippedBudget : CheckStatus::Pass;
  }

  // Ergodicity: every pair is a 1-cube.
  {
    bool ok = true;
    for (int a = 0; a < size && ok; ++a)
      for (int b = 0; b < size && ok; ++b) ok = x.contains(CubeMap(1, {a, b}));
    report.ergodicity = ok ? CheckStatus::Pass : CheckStatus::Fail;
  }

  // Completion and uniqueness per dimension.
  std::vector<int> unique_at(static_cast<size_t>(dim_cap) + 1, -1);  // -1 unknown, 0 no, 1 yes
  std::vector<std::optional<CornerWitness>> nonunique_witness(static_cast<size_t>(dim_cap) + 1);
  for (int n = 2; n <= dim_cap; ++n) {
    DimCheck dim;
    dim.n = n;
    try {
      CompletionScanResult scan = completion_scan(x, n, budget);
      dim.status = scan.status;
      dim.corners_checked = scan.corners_checked;
      if (scan.existence_witness) dim.witness = scan.existence_witness;
      unique_at[static_cast<size_t>(n)] = scan.unique ? 1 : 0;
      nonunique_witness[static_cast<size_t>(n)] = scan.uniqueness_witness;
    } catch (const BudgetExceeded& e) {
      dim.status = CheckStatus::SkippedBudget;
      report.notes.push_back(std::string("completion skipped: ") + e.what());
    }
    report.completion.push_back(std::move(dim));
  }

  // Step: smallest k with unique completion at k+1. Higher checked
  // dimensions must stay unique (restriction determinacy), and the
  // dimension just below, when checked, witnesses non-uniqueness.
  for (int n = 2; n <= dim_cap; ++n) {
    if (unique_at[static_cast<size_t>(n)] == 1) {
      report.step = n - 1;
      for (int d = n + 1; d <= dim_cap; ++d)
        if (unique_at[static_cast<size_t>(d)] == 0) {
          report.consistency_pass = false;
          report.notes.push_back("uniqueness at dimension " + std::to_string(n) +
                                 " but multiple completions at dimension " + std::to_string(d));
        }
      if (n > 2 && unique_at[static_cast<size_t>(n - 1)] == 0)
        report.step_witness = nonunique_witness[static_cast<size_t>(n - 1)];
      break;
    }
  }

  // Largest verified full-ergodicity degree.
  report.k_ergodic = report.ergodicity == CheckStatus::Pass ? 1 : 0;
  for (int k = 2; k <= dim_cap && report.k_ergodic == k - 1; ++k) {
    const uint64_t total = sat_pow(static_cast<uint64_t>(size), vertex_count(k));
    try {
      budget.require(total * vertex_count(k), "ergodicity scan at dimension " + std::to_string(k));
    } catch (const BudgetExceeded& e) {
      report.notes.push_back(std::string("ergodicity scan skipped: ") + e.what());
      break;
    }
    std::atomic<bool> bad{false};
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
      std::vector<int> vals(vertex_count(k));
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (int64_t code = 0; code < static_cast<int64_t>(total); ++code) {
        if (bad.load(std::memory_order_relaxed)) continue;
        decode(static_cast<uint64_t>(code), size, vals);
        if (!x.contains(CubeMap(k, vals))) bad.store(true, std::memory_order_relaxed);
      }
    }
    if (!bad.load()) report.k_ergodic = k;
  }

  // Determinacy cross-checks. Down: a pair is a 1-cube iff its cylinder
  // extension is a 2-cube. Up (when the step is known): membership at the
  // top dimension is equivalent to face membership plus the top-restriction
  // test. Checked on enumerated cubes and single-vertex mutations of them.
  {
    bool ok = true;
    SplitMix64 rng(0x9e3779b9u);
    if (dim_cap >= 2) {
      CubeMorphism cyl = projection(2, {1});
      for (int a = 0; a < size && ok; ++a)
        for (int b = 0; b < size && ok; ++b) {
          CubeMap c(1, {a, b});
          ok = x.contains(c) == x.contains(pullback(c, cyl));
        }
    }
    if (report.step && dim_cap >= *report.step + 2 && cubes[static_cast<size_t>(dim_cap)]) {
      const int k = *report.step;
      const int n = dim_cap;
      CubeMorphism top = identity_morphism(k + 1);
      for (int i = k + 2; i <= n; ++i) top = compose(face_embedding(i, i, 1), top);
      size_t samples = 0;
      for (const CubeMap& base : *cubes[static_cast<size_t>(n)]) {
        if (samples >= 4000) break;
        CubeMap mutated = base;
        mutated.values[rng.uniform_index(vertex_count(n))] =
            static_cast<int>(rng.uniform_index(static_cast<uint32_t>(size)));
        for (const CubeMap& c : {base, mutated}) {
          ++samples;
          bool faces_ok = true;
          for (int i = 1; i <= n && faces_ok; ++i) faces_ok = x.contains(face(c, i, 0));
          bool expected = faces_ok && x.contains(pullback(c, top));
          if (x.contains(c) != expected) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (!ok) {
      report.consistency_pass = false;
      report.notes.push_back("determinacy cross-check failed");
    }
  }

  return report;
}

}  // namespace cubelab
