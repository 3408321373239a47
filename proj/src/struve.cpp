#include "gstruve/struve.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "entire.hpp"
#include "gstruve/error.hpp"
#include "gstruve/special.hpp"

namespace gstruve {

namespace {

constexpr Accum kPoleGuard = 1e-300L;

void require_abscissa(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(what) + ": abscissa must be positive and finite, got " + std::to_string(x));
}

void require_deriv(int deriv) {
  if (deriv < 0 || deriv > 2) throw DomainError("derivative order must be 0, 1 or 2");
}

}  // namespace

double SeriesTerm::value() const { return sign * std::exp(log_magnitude); }

SeriesTerm coefficient(const StruveParams& params, int n) {
  params.validate();
  if (n < 0) throw DomainError("coefficient index must be nonnegative");
  SeriesTerm term;
  term.index = n;
  term.sign = (n % 2 == 0) ? 1 : -1;
  term.log_magnitude = n * std::log(params.c) - log_gamma(n + 1.0) - log_gamma(params.q * double(n) + params.shift());
  return term;
}

double eval_w(const StruveParams& params, double x, int deriv) {
  params.validate();
  require_abscissa(x, "eval_w");
  require_deriv(deriv);
  const Weight weight = deriv == 0   ? detail::unit_weight()
                        : deriv == 1 ? detail::w_prime_weight(params)
                                     : detail::w_second_weight(params);
  const SeriesSum s = sum_entire(params, weight, detail::quarter_square(x));
  const double order = params.p + 1.0;
  const Accum log_prefactor =
      Accum(order - deriv) * std::log(Accum(x)) - Accum(order) * std::numbers::ln2_v<Accum> - log_gamma(params.shift());
  return double(std::exp(log_prefactor) * s.value);
}

double log_derivative(const StruveParams& params, double x) {
  params.validate();
  require_abscissa(x, "log_derivative");
  const SeriesSum s = sum_entire(params, detail::unit_weight(), detail::quarter_square(x));
  if (std::fabs(s.value) < kPoleGuard)
    throw PoleError("log_derivative: W vanishes at x=" + std::to_string(x));
  return double(Accum(params.p + 1.0) + 2 * s.moment / s.value);
}

double eval_normalized(const StruveParams& params, Normalization kind, double x, int deriv) {
  params.validate();
  require_abscissa(x, "eval_normalized");
  require_deriv(deriv);
  const Accum ax = x;

  switch (kind) {
    case Normalization::F: {
      const Accum t = detail::quarter_square(x);
      const SeriesSum e = sum_entire(params, detail::unit_weight(), t);
      if (!(e.value > 0))
        throw BranchError("f: 2^(p+1) Gamma(P) W(x) is not positive at x=" + std::to_string(x));
      const Accum order = params.p + 1.0;
      const Accum root = std::exp(std::log(e.value) / order);  // (x^(p+1) E)^(1/(p+1)) / x
      const Accum ld = order + 2 * e.moment / e.value;       // x W'/W
      if (deriv == 0) return double(ax * root);
      if (deriv == 1) return double(root * ld / order);
      const SeriesSum w2 = sum_entire(params, detail::w_second_weight(params), t);
      // f''/f = W''/((p+1) W) + (1/(p+1)^2 - 1/(p+1)) (W'/W)^2
      const Accum bracket = w2.value / (order * e.value) + (1 / (order * order) - 1 / order) * ld * ld;
      return double(root * bracket / ax);
    }
    case Normalization::G: {
      const Accum t = detail::quarter_square(x);
      if (deriv == 0) return double(ax * sum_entire(params, detail::unit_weight(), t).value);
      const SeriesSum gp = sum_entire(params, detail::g_prime_weight(), t);
      if (deriv == 1) return double(gp.value);
      return double(2 * gp.moment / ax);
    }
    case Normalization::H: {
      const Accum t = ax / 4;
      if (deriv == 0) return double(ax * sum_entire(params, detail::unit_weight(), t).value);
      const SeriesSum hp = sum_entire(params, detail::h_prime_weight(), t);
      if (deriv == 1) return double(hp.value);
      return double(hp.moment / ax);
    }
  }
  throw DomainError("unknown normalization");
}

}  // namespace gstruve
