#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gstruve/params.hpp"

namespace gstruve {

// Entire functions whose positive zeros drive the radii and the bounds.
// Each is scanned in its own natural variable v:
//   W             W(v)                       zeros omega_n
//   WPrime        W'(v)                      zeros omega'_n (= epsilon_n)
//   GPrimeSubst   g'(2 sqrt v)               zeros alpha_n
//   HPrimeSubst   h'(4 v)                    zeros varsigma_n
//   AlexGSubst    (z g'(z))' at z = 2 sqrt v zeros rho_n
//   AlexH         (z h'(z))'(v)              zeros tau_n
enum class Family { W, WPrime, GPrimeSubst, HPrimeSubst, AlexGSubst, AlexH };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
[[nodiscard]] Family parse_family(std::string_view s);

// The family's function normalized to 1 at v = 0 (for W and W' the positive
// factor x^(p+1) resp. x^p is stripped). Same sign as the named function.
[[nodiscard]] double family_value(const StruveParams& params, Family family, double v);

struct ZeroSequence {
  Family family = Family::W;
  StruveParams params;
  std::vector<double> zeros;
  // |target(zero)| divided by the series' absolute-term sum.
  std::vector<double> residuals;
  // Sign-change bracket each zero was refined from.
  std::vector<std::pair<double, double>> brackets;
  // Number of scans needed (1 unless a missed zero forced a finer rescan).
  int scan_passes = 1;
};

inline constexpr int kMaxZeroCount = 64;
inline constexpr double kScanLimit = 1e6;

// First `count` positive zeros, each bracketed by a sign change and bisected
// to a width below 1e-12 (1 + zero). The scan steps in the Bessel-like
// abscissa x with t = x^2/4, where consecutive zeros are roughly evenly
// spaced; a failed interlacing check against the reference family halves
// the step and rescans. Throws ScanOverflowError beyond
// abscissa 1e6 and PrecisionLossError when series cancellation leaves a zero
// undetermined to ~1e-9 relative.
[[nodiscard]] ZeroSequence find_zeros(const StruveParams& params, Family family, int count);

struct InterlacingReport {
  bool interlaced = false;
  // 1-based position in the merged chain a1 < b1 < a2 < b2 < ... of the
  // first inequality that fails.
  std::optional<int> first_violation;
  // Smallest gap between neighbours in the chain, relative to the larger one.
  double worst_margin = 0.0;
};

// True iff a1 < b1 < a2 < b2 < ... strictly. `lower` holds the zeros of the
// derivative-like function (e.g. W'), `upper` those of the function (W).
// Throws LengthMismatchError unless both sequences have the same length.
[[nodiscard]] InterlacingReport check_interlacing(const ZeroSequence& lower, const ZeroSequence& upper);
[[nodiscard]] InterlacingReport check_interlacing(const std::vector<double>& lower,
                                                  const std::vector<double>& upper);

}  // namespace gstruve
