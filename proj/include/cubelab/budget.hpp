#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cubelab {

// Thrown when an exhaustive computation would exceed the operation budget.
// The CLI maps this to exit code 2 (distinct from verification failures).
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, uint64_t needed, uint64_t budget)
      : std::runtime_error(what + " needs ~" + std::to_string(needed) + " ops, budget is " +
                           std::to_string(budget)),
        needed_ops(needed),
        budget_ops(budget) {}
  uint64_t needed_ops;
  uint64_t budget_ops;
};

struct Budget {
  uint64_t ops = 1'000'000'000;  // default operation cap for exact sums/enumerations

  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("CUBELAB_BUDGET")) {
      char* end = nullptr;
      uint64_t v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) b.ops = v;
    }
    return b;
  }

  void require(uint64_t needed, const std::string& what) const {
    if (needed > ops) throw BudgetExceeded(what, needed, ops);
  }
};

// Saturating power, used for cost estimates of the form |X|^k.
inline uint64_t sat_pow(uint64_t base, unsigned exp) {
  uint64_t r = 1;
  while (exp--) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace cubelab
