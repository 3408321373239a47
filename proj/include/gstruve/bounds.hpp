#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gstruve/params.hpp"
#include "gstruve/zeros.hpp"

namespace gstruve {

enum class SumSource { ClosedForm, Newton };

// Euler-Rayleigh power sums S_k = sum_n u_n^(-k) over the zeros u_n of a
// family in its power-sum variable (u = v^2 for W and W', u = v otherwise).
struct RayleighSums {
  Family family = Family::WPrime;
  std::vector<double> sums;  // sums[k-1] = S_k
  SumSource source = SumSource::Newton;
};

// The five radii that carry Euler-Rayleigh bounds (all at alpha = 0).
enum class BoundFamily { FStarlike, GStarlike, HStarlike, GConvex, HConvex };

[[nodiscard]] std::string_view to_string(BoundFamily f) noexcept;
[[nodiscard]] BoundFamily parse_bound_family(std::string_view s);
[[nodiscard]] Family auxiliary_family(BoundFamily f) noexcept;

enum class RadiusTag { Starlike0, Convex0 };

struct BoundsPair {
  int k = 1;
  double lower = 0.0;
  double upper = 0.0;
  Family family = Family::WPrime;
  RadiusTag radius_kind = RadiusTag::Starlike0;
  std::vector<double> sums;  // S_1 .. S_{k+1}
};

// S_1, S_2 in closed form (tau, l, kappa, mu, upsilon for the five families).
// Defined for the five auxiliary families; DomainError for Family::W.
[[nodiscard]] RayleighSums rayleigh_sums_closed_form(const StruveParams& params, Family family);

// Newton's identities on normalized coefficients 1 + a_1 u + a_2 u^2 + ...:
//   S_1 = -a_1,  S_k = -k a_k - sum_{i=1}^{k-1} a_i S_{k-i}.
// `coeffs` holds a_1..a_K. Throws PrecisionLossError when the propagated
// rounding error bound exceeds 1e-6 relative or a sum comes out non-positive.
[[nodiscard]] std::vector<double> newton_power_sums(std::span<const double> coeffs);

// Normalized power-series coefficients a_1..a_K of the family in u.
[[nodiscard]] std::vector<double> family_coefficients(const StruveParams& params, Family family, int count);

inline constexpr int kMaxNewtonOrder = 12;

[[nodiscard]] RayleighSums rayleigh_sums_newton(const StruveParams& params, Family family, int K);

// Euler-Rayleigh lower/upper bounds S_k^(-1/k) < u_1 < S_k/S_{k+1} carried
// back to the radius variable. For k = 1 the Newton sums are checked against
// the closed forms.
[[nodiscard]] BoundsPair bounds_for(const StruveParams& params, BoundFamily family, int k);

// Alternative k = 1 forms for f (starlike) and g (convex): a lower bound
// smaller by sqrt 2 and upper denominators with other weights. They are not
// guaranteed to bracket the radius. Empty when the expression is not a real
// number, and for the other three families.
struct StatementForm {
  std::optional<double> lower;
  std::optional<double> upper;
};
[[nodiscard]] StatementForm statement_form_bounds(const StruveParams& params, BoundFamily family);

}  // namespace gstruve
