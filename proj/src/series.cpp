#include "gstruve/series.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "gstruve/error.hpp"

namespace gstruve {

namespace {

constexpr int kMinTerms = 8;
constexpr int kMaxTerms = 10000;

template <class Real>
SeriesSum sum_with(const StruveParams& params, const Weight& weight, const Real& t) {
  using std::fabs;
  using boost::multiprecision::fabs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real cutoff = eps / 4;
  const Real shift = params.shift();
  const Real c = params.c;
  const int q = params.q;

  Real value = 0, moment = 0, abs_sum = 0;
  Real coeff = 1;  // e_n
  Real power = 1;  // t^n
  Real max_value = 0, max_moment = 0;
  Real prev_mag = -1;

  for (int n = 0; n < kMaxTerms; ++n) {
    if (n > 0) {
      Real denom = n;
      const Real base = shift + Real(q) * (n - 1);
      for (int j = 0; j < q; ++j) denom *= base + j;
      coeff *= -c / denom;
      power *= t;
    }
    const Real term = coeff * power * weight.at_as<Real>(n);
    const Real mag = fabs(term);
    value += term;
    moment += term * n;
    abs_sum += mag;

    if (fabs(value) > max_value) max_value = fabs(value);
    if (fabs(moment) > max_moment) max_moment = fabs(moment);

    if (!(abs_sum < Real(std::numeric_limits<Accum>::max())))
      throw NonConvergenceError("series overflow at t=" + std::to_string(static_cast<double>(t)));

    const bool decaying = prev_mag < 0 || mag <= prev_mag;
    const bool small = mag <= cutoff * max_value && mag * n <= cutoff * max_moment;
    if (n + 1 >= kMinTerms && decaying && (small || mag == 0)) {
      SeriesSum out;
      out.value = static_cast<Accum>(value);
      out.moment = static_cast<Accum>(moment);
      out.abs_sum = static_cast<Accum>(abs_sum);
      out.noise = static_cast<Accum>(16 * eps * abs_sum);
      out.terms = n + 1;
      out.digits = std::numeric_limits<Real>::digits10;
      return out;
    }
    prev_mag = mag;
  }
  throw NonConvergenceError("series did not converge within 10000 terms at t=" +
                            std::to_string(static_cast<double>(t)));
}

template <class Real>
Real series_variable(double v, SeriesVariable var) {
  const Real x = v;
  return var.squared ? x * x / 4 : Real(var.scale) * x;
}

bool settled(const SeriesSum& s) { return s.noise <= std::fabs(s.value) / 4 || s.noise <= 1e-25L; }

template <unsigned Digits>
using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                          boost::multiprecision::et_off>;

}  // namespace

SeriesSum sum_entire(const StruveParams& params, const Weight& weight, Accum t) {
  return sum_with<Accum>(params, weight, t);
}

SeriesSum sum_entire_adaptive(const StruveParams& params, const Weight& weight, double v, SeriesVariable var) {
  SeriesSum s = sum_with<Accum>(params, weight, series_variable<Accum>(v, var));
  if (settled(s)) return s;
  s = sum_with(params, weight, series_variable<Big<50>>(v, var));
  if (settled(s)) return s;
  s = sum_with(params, weight, series_variable<Big<100>>(v, var));
  if (settled(s)) return s;
  s = sum_with(params, weight, series_variable<Big<200>>(v, var));
  if (settled(s)) return s;
  return sum_with(params, weight, series_variable<Big<400>>(v, var));
}

}  // namespace gstruve
