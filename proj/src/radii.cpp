#include "gstruve/radii.hpp"

#include <cmath>
#include <string>

#include "entire.hpp"
#include "gstruve/error.hpp"
#include "gstruve/zeros.hpp"

namespace gstruve {

namespace {

Accum ratio_or_pole(Accum num, Accum den, const char* what, double r) {
  if (den == 0) throw PoleError(std::string(what) + ": denominator vanishes at r=" + std::to_string(r));
  return num / den;
}

void require_radius_arg(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("quotient argument must be positive, got " + std::to_string(r));
}

RadiusResult solve(const RadiusQuery& query) {
  query.params.validate();
  if (query.alpha >= 1.0)
    throw NoRootError("order alpha must be below 1; the quotient never reaches " + std::to_string(query.alpha));
  if (!(query.alpha >= 0.0)) throw DomainError("order alpha must lie in [0, 1), got " + std::to_string(query.alpha));

  const auto quotient = [&](double r) {
    return query.kind == RadiusKind::Starlike ? starlike_quotient(query.params, query.normalization, r)
                                              : convex_quotient(query.params, query.normalization, r);
  };
  const double upper = radius_upper_limit(query.params, query.kind, query.normalization);

  double lo = 1e-8 * upper;
  double hi = (1.0 - 1e-10) * upper;
  const double f_lo = quotient(lo) - query.alpha;
  const double f_hi = quotient(hi) - query.alpha;
  if (!(f_lo > 0.0) || !(f_hi < 0.0))
    throw BracketError("radius bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] has no sign change for " + query.params.to_string() + " (" + std::to_string(f_lo) + ", " +
                       std::to_string(f_hi) + ")");

  RadiusResult result;
  result.upper_limit = upper;
  int it = 0;
  for (; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double f = quotient(mid) - query.alpha;
    if (f > 0.0)
      lo = mid;
    else if (f < 0.0)
      hi = mid;
    else {
      lo = hi = mid;
      break;
    }
  }
  result.value = 0.5 * (lo + hi);
  result.lo = lo;
  result.hi = hi;
  result.iterations = it;
  result.residual = quotient(result.value) - query.alpha;
  return result;
}

}  // namespace

std::string_view to_string(RadiusKind k) noexcept { return k == RadiusKind::Starlike ? "starlike" : "convex"; }

RadiusKind parse_radius_kind(std::string_view s) {
  if (s == "starlike") return RadiusKind::Starlike;
  if (s == "convex") return RadiusKind::Convex;
  throw DomainError("unknown radius kind '" + std::string(s) + "' (expected starlike or convex)");
}

double starlike_quotient(const StruveParams& params, Normalization n, double r) {
  params.validate();
  require_radius_arg(r);
  const Accum t = n == Normalization::H ? Accum(r) / 4 : detail::quarter_square(r);
  const SeriesSum e = sum_entire(params, detail::unit_weight(), t);
  const Accum log_term = ratio_or_pole(e.moment, e.value, "starlike quotient", r);
  switch (n) {
    case Normalization::F: return double(1 + 2 * log_term / Accum(params.p + 1.0));
    case Normalization::G: return double(1 + 2 * log_term);
    case Normalization::H: return double(1 + log_term);
  }
  throw DomainError("unknown normalization");
}

double convex_quotient(const StruveParams& params, Normalization n, double r) {
  params.validate();
  require_radius_arg(r);
  switch (n) {
    case Normalization::F: {
      // 1 + (1/(p+1) - 1) r W'/W + r W''/W'
      const Accum t = detail::quarter_square(r);
      const Accum order = params.p + 1.0;
      const SeriesSum e = sum_entire(params, detail::unit_weight(), t);
      const SeriesSum d = sum_entire(params, detail::w_prime_weight(params), t);
      const Accum rw1 = order + 2 * ratio_or_pole(e.moment, e.value, "convex quotient (f)", r);
      const Accum rw2 = Accum(params.p) + 2 * ratio_or_pole(d.moment, d.value, "convex quotient (f)", r);
      return double(1 + (1 / order - 1) * rw1 + rw2);
    }
    case Normalization::G: {
      const SeriesSum gp = sum_entire(params, detail::g_prime_weight(), detail::quarter_square(r));
      return double(1 + 2 * ratio_or_pole(gp.moment, gp.value, "convex quotient (g)", r));
    }
    case Normalization::H: {
      const SeriesSum hp = sum_entire(params, detail::h_prime_weight(), Accum(r) / 4);
      return double(1 + ratio_or_pole(hp.moment, hp.value, "convex quotient (h)", r));
    }
  }
  throw DomainError("unknown normalization");
}

double radius_upper_limit(const StruveParams& params, RadiusKind kind, Normalization n) {
  if (kind == RadiusKind::Starlike) {
    const double omega1 = find_zeros(params, Family::W, 1).zeros.front();
    return n == Normalization::H ? omega1 * omega1 : omega1;
  }
  switch (n) {
    case Normalization::F: return find_zeros(params, Family::WPrime, 1).zeros.front();
    case Normalization::G: return 2.0 * std::sqrt(find_zeros(params, Family::GPrimeSubst, 1).zeros.front());
    case Normalization::H: return 4.0 * find_zeros(params, Family::HPrimeSubst, 1).zeros.front();
  }
  throw DomainError("unknown normalization");
}

RadiusResult radius_starlike(const RadiusQuery& query) {
  if (query.kind != RadiusKind::Starlike) throw DomainError("radius_starlike needs a starlike query");
  return solve(query);
}

RadiusResult radius_convex(const RadiusQuery& query) {
  if (query.kind != RadiusKind::Convex) throw DomainError("radius_convex needs a convex query");
  return solve(query);
}

RadiusResult solve_radius(const RadiusQuery& query) { return solve(query); }

}  // namespace gstruve
