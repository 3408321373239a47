#pragma once

#include "gstruve/params.hpp"

namespace gstruve {

// a_n = (-1)^n c^n / (n! Gamma(q n + P)) stored as sign and ln|a_n|, so that
// W(z) = sum_n a_n (z/2)^(2n+p+1).
struct SeriesTerm {
  int index = 0;
  double log_magnitude = 0.0;
  int sign = 1;

  [[nodiscard]] double value() const;
};

[[nodiscard]] SeriesTerm coefficient(const StruveParams& params, int n);

// W(x), W'(x) or W''(x) for x > 0 from the term-wise differentiated series.
// x^(p+1) is taken as exp((p+1) ln x).
[[nodiscard]] double eval_w(const StruveParams& params, double x, int deriv = 0);

// f, g or h (deriv = 0) or one of their first two derivatives at x > 0.
// Throws BranchError for F when 2^(p+1) Gamma(P) W(x) <= 0.
[[nodiscard]] double eval_normalized(const StruveParams& params, Normalization kind, double x,
                                     int deriv = 0);

// x W'(x) / W(x). Tends to p+1 as x -> 0+ and decreases strictly to -inf on
// (0, first zero). Throws PoleError at a numerical zero of W.
[[nodiscard]] double log_derivative(const StruveParams& params, double x);

}  // namespace gstruve
