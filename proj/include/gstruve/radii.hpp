#pragma once

#include <string_view>

#include "gstruve/params.hpp"

namespace gstruve {

enum class RadiusKind { Starlike, Convex };

[[nodiscard]] std::string_view to_string(RadiusKind k) noexcept;
[[nodiscard]] RadiusKind parse_radius_kind(std::string_view s);

struct RadiusQuery {
  StruveParams params;
  RadiusKind kind = RadiusKind::Starlike;
  Normalization normalization = Normalization::F;
  double alpha = 0.0;  // order, in [0, 1)
};

struct RadiusResult {
  double value = 0.0;
  double lo = 0.0;  // final bisection bracket
  double hi = 0.0;
  double residual = 0.0;  // quotient(value) - alpha
  int iterations = 0;
  // First zero closing the search interval: omega_1 (starlike f, g),
  // omega_1^2 (starlike h), omega'_1 (convex f), first zero of g' (convex g)
  // or of h' (convex h).
  double upper_limit = 0.0;
};

// r f'(r)/f(r) for the chosen normalization. Equals 1 at 0+ and decreases
// strictly to -inf on (0, upper limit).
[[nodiscard]] double starlike_quotient(const StruveParams& params, Normalization n, double r);

// 1 + r f''(r)/f'(r), same monotone shape on its own interval.
[[nodiscard]] double convex_quotient(const StruveParams& params, Normalization n, double r);

// The search interval's right end for a query (see RadiusResult::upper_limit).
[[nodiscard]] double radius_upper_limit(const StruveParams& params, RadiusKind kind, Normalization n);

// Smallest positive root of quotient(r) = alpha, by bisection on
// [1e-8 U, (1 - 1e-10) U]. Throws NoRootError for alpha >= 1, DomainError
// for alpha < 0 and BracketError when the end signs are not as expected.
[[nodiscard]] RadiusResult radius_starlike(const RadiusQuery& query);
[[nodiscard]] RadiusResult radius_convex(const RadiusQuery& query);
[[nodiscard]] RadiusResult solve_radius(const RadiusQuery& query);

}  // namespace gstruve
