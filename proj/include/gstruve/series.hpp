#pragma once

#include <array>

#include "gstruve/params.hpp"

namespace gstruve {

// Accumulator for every power series in the library. x86-64 long double
// carries 64 mantissa bits, which buys three extra digits against the
// cancellation of alternating terms at moderate arguments.
using Accum = long double;

// Polynomial weight w(n) = prod_i (slope_i n + offset_i), at most two factors.
// It selects which entire function the weighted series represents: 1 gives
// the entire part of W, (2n+p+1) that of W', (2n+1) that of g', and so on.
class Weight {
public:
  constexpr Weight() = default;
  static constexpr Weight linear(double slope, double offset) {
    Weight w;
    w.factors_[0] = {slope, offset};
    w.count_ = 1;
    return w;
  }
  static constexpr Weight product(double s0, double o0, double s1, double o1) {
    Weight w;
    w.factors_[0] = {s0, o0};
    w.factors_[1] = {s1, o1};
    w.count_ = 2;
    return w;
  }
  [[nodiscard]] constexpr Accum at(int n) const { return at_as<Accum>(n); }

  template <class Real>
  [[nodiscard]] constexpr Real at_as(int n) const {
    Real v = 1;
    for (int i = 0; i < count_; ++i) v *= Real(factors_[i].slope) * n + Real(factors_[i].offset);
    return v;
  }

private:
  struct Affine {
    double slope = 0.0;
    double offset = 1.0;
  };
  std::array<Affine, 2> factors_{};
  int count_ = 0;
};

struct SeriesSum {
  Accum value = 0;     // sum_n e_n w(n) t^n
  Accum moment = 0;    // sum_n n e_n w(n) t^n, i.e. t d/dt of value
  Accum abs_sum = 0;   // sum_n |e_n w(n) t^n|, the cancellation scale
  Accum noise = 0;     // rounding bound 16 eps abs_sum at the precision used
  int terms = 0;
  int digits = 0;      // decimal digits of the accumulator that produced it
};

// Sums sum_{n>=0} e_n w(n) t^n for t >= 0, where
//
//   e_n = (-c)^n Gamma(P) / (n! Gamma(q n + P)),   e_0 = 1,
//
// is generated by the exact ratio e_n / e_{n-1} = -c / (n prod_j (P + q(n-1) + j)).
// Summation stops once a term and its n-weighted counterpart drop below
// machine epsilon relative to the running maximum partial sums (and at least
// eight terms were used). Throws NonConvergenceError past 10000 terms.
[[nodiscard]] SeriesSum sum_entire(const StruveParams& params, const Weight& weight, Accum t);

// Series variable as a function of an abscissa v >= 0: t = v^2 / 4 when
// `squared`, t = scale * v otherwise.
struct SeriesVariable {
  bool squared = true;
  Accum scale = 1;
};

// sum_entire at t(v), repeated with 50, 100, 200 and 400 decimal digits while
// the rounding bound exceeds a quarter of |value| (so the sign is not yet
// certain) and 1e-25. t is formed at the working precision. The result may
// still be unreliable past 400 digits; callers compare noise with value.
[[nodiscard]] SeriesSum sum_entire_adaptive(const StruveParams& params, const Weight& weight, double v,
                                            SeriesVariable var);

}  // namespace gstruve
