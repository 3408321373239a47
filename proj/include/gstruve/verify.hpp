#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gstruve/params.hpp"

namespace gstruve {

enum class Suite { Interlacing, Sandwich, Bessel, Monotone, Scaling, All };

[[nodiscard]] std::string_view to_string(Suite s) noexcept;
[[nodiscard]] Suite parse_suite(std::string_view s);

enum class CheckStatus { Pass, Fail, Info };

[[nodiscard]] std::string_view to_string(CheckStatus s) noexcept;

// One property aggregated over the grid. `worst` is the extreme observed
// value of the checked quantity and `limit` the bound it must respect in the
// direction given by `relation` (">", ">=" or "<=").
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double worst = 0.0;
  double limit = 0.0;
  std::string relation;
  int samples = 0;
  int failures = 0;
  std::string detail;  // first failing sample, empty when none failed
};

struct VerifyReport {
  Suite suite = Suite::All;
  int grid_size = 0;
  std::vector<CheckResult> checks;  // failed checks first, then definition order

  [[nodiscard]] bool passed() const noexcept;
};

inline constexpr int kVerifyZeroCount = 5;

// Runs the suite's invariants on every grid point. Grid points are evaluated
// concurrently when `parallel`; the report is identical either way. The
// bessel suite uses its own order grid {0.5, 1, 2, 3.5} and ignores `grid`.
// Throws DomainError for an empty grid.
[[nodiscard]] VerifyReport verify_suite(Suite suite, const std::vector<StruveParams>& grid, bool parallel = true);

}  // namespace gstruve
