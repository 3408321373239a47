#include "gstruve/bessel.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <string>

#include "gstruve/error.hpp"

namespace gstruve::bessel {

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

void require_argument(double x) {
  if (!(x > 0.0) || !(x <= 50.0)) throw DomainError("bessel_j: x must lie in (0, 50], got " + std::to_string(x));
}

// sum_k (-1)^k w_k (x/2)^(2k + nu - shift) / (k! Gamma(k + nu + 1)), where
// w_k = 1 for the function and (2k + nu)/2 for its derivative (shift = 1).
double ascending_series(double nu, double x, bool derivative) {
  const Big half_x = Big(x) / 2;
  const Big square = half_x * half_x;
  const Big bnu = nu;
  const Big lead_power = derivative ? Big(nu - 1.0) : bnu;
  Big term = pow(half_x, lead_power) / boost::math::tgamma(bnu + 1);
  Big sum = 0;
  Big largest = 0;
  const Big tiny = std::numeric_limits<Big>::epsilon();
  for (int k = 0; k < 2000; ++k) {
    const Big weighted = derivative ? term * (2 * k + bnu) / 2 : term;
    sum += weighted;
    largest = std::max(largest, abs(weighted));
    if (k > 4 && abs(weighted) <= tiny * largest) break;
    term *= -square / (Big(k + 1) * (bnu + k + 1));
  }
  return static_cast<double>(sum);
}

double bisect(double nu, bool derivative, double lo, double hi) {
  const bool lo_positive = ascending_series(nu, lo, derivative) > 0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) return mid;
    if ((ascending_series(nu, mid, derivative) > 0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("Bessel order must be positive, got " + std::to_string(nu));
}

double bessel_j(BesselOrder nu, double x) {
  require_argument(x);
  return ascending_series(nu.value(), x, false);
}

double bessel_j_prime(BesselOrder nu, double x) {
  require_argument(x);
  return ascending_series(nu.value(), x, true);
}

std::vector<double> bessel_j_zeros(BesselOrder nu, int count, bool derivative) {
  if (count < 1) throw DomainError("zero count must be positive");
  std::vector<double> zeros;
  constexpr double step = 0.05;
  double prev_x = step;
  double prev = ascending_series(nu.value(), prev_x, derivative);
  for (int i = 2; static_cast<int>(zeros.size()) < count; ++i) {
    const double x = i * step;
    if (x > 50.0)
      throw ScanOverflowError("only " + std::to_string(zeros.size()) + " Bessel zeros below 50");
    const double cur = ascending_series(nu.value(), x, derivative);
    if ((cur > 0) != (prev > 0)) zeros.push_back(bisect(nu.value(), derivative, prev_x, x));
    prev_x = x;
    prev = cur;
  }
  return zeros;
}

StruveParams reduce_to_bessel(BesselOrder nu) { return StruveParams::make(1, nu.value() - 1.0, 2.0, 1.0, 1.0); }

BoundsPair corollary_bounds(BesselOrder order, BoundFamily which) {
  const double nu = order.value();
  BoundsPair out;
  out.k = 1;
  out.family = auxiliary_family(which);
  out.radius_kind =
      (which == BoundFamily::GConvex || which == BoundFamily::HConvex) ? RadiusTag::Convex0 : RadiusTag::Starlike0;
  switch (which) {
    case BoundFamily::FStarlike:
      out.lower = 2.0 * std::sqrt(nu * (nu + 1.0) / (nu + 2.0));
      out.upper = 2.0 * (nu + 2.0) * std::sqrt(nu * (nu + 1.0) / (nu * nu + 8.0 * nu + 8.0));
      break;
    case BoundFamily::GStarlike:
      out.lower = 2.0 * std::sqrt((nu + 1.0) / 3.0);
      out.upper = 2.0 * std::sqrt(3.0 * (nu + 1.0) * (nu + 2.0) / (4.0 * nu + 13.0));
      break;
    case BoundFamily::HStarlike:
      out.lower = 2.0 * (nu + 1.0);
      out.upper = 8.0 * (nu + 1.0) * (nu + 2.0) / (nu + 5.0);
      break;
    case BoundFamily::GConvex:
      out.lower = 2.0 / 3.0 * std::sqrt(nu + 1.0);
      out.upper = 6.0 * std::sqrt((nu + 1.0) * (nu + 2.0) / (56.0 * nu + 137.0));
      break;
    case BoundFamily::HConvex:
      out.lower = nu + 1.0;
      out.upper = 16.0 * (nu + 1.0) * (nu + 2.0) / (7.0 * nu + 23.0);
      break;
  }
  return out;
}

}  // namespace gstruve::bessel
