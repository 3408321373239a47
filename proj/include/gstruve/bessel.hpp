#pragma once

#include <vector>

#include "gstruve/bounds.hpp"
#include "gstruve/params.hpp"

namespace gstruve::bessel {

// Order nu > 0 of J_nu. Throws DomainError otherwise.
class BesselOrder {
public:
  BesselOrder(double nu);  // NOLINT(google-explicit-constructor)
  [[nodiscard]] double value() const noexcept { return nu_; }

private:
  double nu_;
};

// J_nu(x) for x in (0, 50] from its ascending series summed in 50-digit
// binary floating point. Shares no code with the Struve evaluator.
[[nodiscard]] double bessel_j(BesselOrder nu, double x);

// J_nu'(x) from the term-wise differentiated series, same domain.
[[nodiscard]] double bessel_j_prime(BesselOrder nu, double x);

// First `count` positive zeros of J_nu (or of J_nu' when `derivative`),
// located by a fixed 0.05 sign scan and bisected to full double precision.
// Zeros must lie inside (0, 50].
[[nodiscard]] std::vector<double> bessel_j_zeros(BesselOrder nu, int count, bool derivative = false);

// (q, p, b, c, delta) = (1, nu - 1, 2, 1, 1), so that P = nu + 1 and W = J_nu.
[[nodiscard]] StruveParams reduce_to_bessel(BesselOrder nu);

// Closed-form k = 1 bounds of the Bessel specialization:
//   FStarlike  2 sqrt(nu(nu+1)/(nu+2)),  2(nu+2) sqrt(nu(nu+1)/(nu^2+8nu+8))
//   GStarlike  2 sqrt((nu+1)/3),         2 sqrt(3(nu+1)(nu+2)/(4nu+13))
//   HStarlike  2(nu+1),                  8(nu+1)(nu+2)/(nu+5)
//   GConvex    (2/3) sqrt(nu+1),         6 sqrt((nu+1)(nu+2)/(56nu+137))
//   HConvex    nu+1,                     16(nu+1)(nu+2)/(7nu+23)
[[nodiscard]] BoundsPair corollary_bounds(BesselOrder nu, BoundFamily which);

}  // namespace gstruve::bessel
