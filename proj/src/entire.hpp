#pragma once

// Weights selecting the entire functions built from W. With e_n the base
// coefficients of sum_entire and t the series variable:
//
//   W(x)       = x^(p+1)   / (2^(p+1) Gamma(P)) * S[1](x^2/4)
//   W'(x)      = x^p       / (2^(p+1) Gamma(P)) * S[2n+p+1](x^2/4)
//   W''(x)     = x^(p-1)   / (2^(p+1) Gamma(P)) * S[(2n+p+1)(2n+p)](x^2/4)
//   g(x)       = x S[1](x^2/4),   g'(x) = S[2n+1](x^2/4),   (x g')'(x) = S[(2n+1)^2](x^2/4)
//   h(z)       = z S[1](z/4),     h'(z) = S[n+1](z/4),      (z h')'(z) = S[(n+1)^2](z/4)

#include "gstruve/series.hpp"

namespace gstruve::detail {

constexpr Weight unit_weight() { return Weight::linear(0.0, 1.0); }
inline Weight w_prime_weight(const StruveParams& p) { return Weight::linear(2.0, p.p + 1.0); }
inline Weight w_second_weight(const StruveParams& p) { return Weight::product(2.0, p.p + 1.0, 2.0, p.p); }
constexpr Weight g_prime_weight() { return Weight::linear(2.0, 1.0); }
constexpr Weight h_prime_weight() { return Weight::linear(1.0, 1.0); }
constexpr Weight alexander_g_weight() { return Weight::product(2.0, 1.0, 2.0, 1.0); }
constexpr Weight alexander_h_weight() { return Weight::product(1.0, 1.0, 1.0, 1.0); }

inline Accum quarter_square(double x) { return Accum(x) * Accum(x) / 4; }

}  // namespace gstruve::detail
