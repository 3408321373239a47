#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "gstruve/bounds.hpp"
#include "gstruve/error.hpp"
#include "gstruve/grid.hpp"
#include "gstruve/radii.hpp"
#include "gstruve/zeros.hpp"

using namespace gstruve;

namespace {

const StruveParams kBessel1 = StruveParams::make(1, 0, 2, 1, 1);

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

constexpr BoundFamily kAll[] = {BoundFamily::FStarlike, BoundFamily::GStarlike, BoundFamily::HStarlike,
                                BoundFamily::GConvex, BoundFamily::HConvex};

}  // namespace

TEST_CASE("closed-form sums at nu = 1") {
  const RayleighSums tau = rayleigh_sums_closed_form(kBessel1, Family::WPrime);
  CHECK(tau.source == SumSource::ClosedForm);
  CHECK(tau.sums[0] == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(tau.sums[1] == doctest::Approx(0.375 * 0.375 - 5.0 / 96.0).epsilon(1e-14));
  CHECK(rayleigh_sums_closed_form(kBessel1, Family::HPrimeSubst).sums[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rayleigh_sums_closed_form(kBessel1, Family::AlexGSubst).sums[0] == doctest::Approx(4.5).epsilon(1e-14));
  const RayleighSums ell = rayleigh_sums_closed_form(kBessel1, Family::GPrimeSubst);
  CHECK(ell.sums[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(ell.sums[1] == doctest::Approx(9.0 / 4.0 - 5.0 / 6.0).epsilon(1e-14));
  CHECK_THROWS_AS((void)rayleigh_sums_closed_form(kBessel1, Family::W), DomainError);
}

TEST_CASE("closed-form sums use boost gammas at a q = 2 point") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 2, 0.5);
  const double P = p.shift();
  const double r1 = boost::math::tgamma_ratio(P, P + 2);
  const double r2 = boost::math::tgamma_ratio(P, P + 4);
  const RayleighSums ups = rayleigh_sums_closed_form(p, Family::AlexH);
  CHECK(ups.sums[0] == doctest::Approx(2 * r1).epsilon(1e-12));
  CHECK(ups.sums[1] == doctest::Approx(4 * r1 * r1 - 9.0 * 4 * r2 / 16).epsilon(1e-12));
}

TEST_CASE("Newton identities on a synthetic polynomial") {
  const std::vector<double> coeffs = {-1.5, 0.5};  // (1 - u)(1 - u/2)
  const std::vector<double> sums = newton_power_sums(coeffs);
  CHECK(sums[0] == doctest::Approx(1.5));
  CHECK(sums[1] == doctest::Approx(1.25));
  // (1 - u)(1 - u/2)(1 - u/4): S_3 = 1 + 1/8 + 1/64
  const std::vector<double> cubic = {-1.75, 0.875, -0.125};
  CHECK(newton_power_sums(cubic)[2] == doctest::Approx(1.0 + 0.125 + 1.0 / 64.0));
  // 1 + u^2 has roots +-i: S_1 = 0 is not a sum over positive zeros.
  CHECK_THROWS_AS((void)newton_power_sums(std::vector<double>{0.0, 1.0}), PrecisionLossError);
}

TEST_CASE("Newton sums equal power sums over computed zeros") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 1, 1);
  const RayleighSums newton = rayleigh_sums_newton(p, Family::WPrime, 4);
  const std::vector<double> eps = find_zeros(p, Family::WPrime, 64).zeros;
  // The tail beyond 64 zeros is O(64^(1-2k)); S_1 converges too slowly to compare.
  for (int k = 2; k <= 4; ++k) {
    double s = 0;
    for (double e : eps) s += std::pow(e, -2.0 * k);
    CHECK(rel(newton.sums[k - 1], s) <= 1e-6);
  }
}

TEST_CASE("closed form and Newton agree on the default grid") {
  for (const StruveParams& p : default_grid()) {
    for (BoundFamily bf : kAll) {
      const Family f = auxiliary_family(bf);
      const RayleighSums closed = rayleigh_sums_closed_form(p, f);
      const RayleighSums newton = rayleigh_sums_newton(p, f, 2);
      CHECK(rel(newton.sums[0], closed.sums[0]) <= 1e-11);
      CHECK(rel(newton.sums[1], closed.sums[1]) <= 1e-11);
    }
  }
}

TEST_CASE("bounds_for at nu = 1 reproduce the corollary values") {
  const BoundsPair g = bounds_for(kBessel1, BoundFamily::GStarlike, 1);
  CHECK(g.lower == doctest::Approx(2 * std::sqrt(2.0 / 3.0)).epsilon(1e-13));
  CHECK(g.upper == doctest::Approx(2 * std::sqrt(18.0 / 17.0)).epsilon(1e-13));
  CHECK(g.family == Family::GPrimeSubst);
  CHECK(g.radius_kind == RadiusTag::Starlike0);
  const BoundsPair h = bounds_for(kBessel1, BoundFamily::HStarlike, 1);
  CHECK(h.lower == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(h.upper == doctest::Approx(8.0).epsilon(1e-13));
  const BoundsPair f = bounds_for(kBessel1, BoundFamily::FStarlike, 1);
  CHECK(f.lower == doctest::Approx(2 * std::sqrt(2.0 / 3.0)).epsilon(1e-13));
  CHECK(f.upper == doctest::Approx(6 * std::sqrt(2.0 / 17.0)).epsilon(1e-13));
  CHECK(f.sums.size() == 2);
  const BoundsPair hc = bounds_for(kBessel1, BoundFamily::HConvex, 1);
  CHECK(hc.radius_kind == RadiusTag::Convex0);
  CHECK(hc.lower == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(hc.upper == doctest::Approx(3.2).epsilon(1e-13));
}

TEST_CASE("bounds bracket the radius and tighten with k") {
  for (const StruveParams& p : {kBessel1, StruveParams::make(2, 0.5, 1, 1, 1), StruveParams::make(3, -0.5, 1, 0.5, 2)}) {
    for (BoundFamily bf : kAll) {
      const bool convex = bf == BoundFamily::GConvex || bf == BoundFamily::HConvex;
      const Normalization n = bf == BoundFamily::FStarlike ? Normalization::F
                              : (bf == BoundFamily::GStarlike || bf == BoundFamily::GConvex) ? Normalization::G
                                                                                              : Normalization::H;
      const double r = solve_radius({p, convex ? RadiusKind::Convex : RadiusKind::Starlike, n, 0.0}).value;
      BoundsPair prev = bounds_for(p, bf, 1);
      CHECK(prev.lower < r);
      CHECK(r < prev.upper);
      for (int k = 2; k <= 8; ++k) {
        const BoundsPair b = bounds_for(p, bf, k);
        CHECK(b.lower >= prev.lower);
        CHECK(b.upper <= prev.upper);
        CHECK(b.lower < r * (1 + 1e-12));
        CHECK(r < b.upper * (1 + 1e-12));
        prev = b;
      }
      CHECK((prev.upper - prev.lower) / r < 1e-4);
    }
  }
}

TEST_CASE("statement-form bounds") {
  const StatementForm f = statement_form_bounds(kBessel1, BoundFamily::FStarlike);
  REQUIRE(f.lower.has_value());
  REQUIRE(f.upper.has_value());
  CHECK(*f.lower == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-13));  // bounds_for lower / sqrt 2
  CHECK(*f.upper == doctest::Approx(2 * std::sqrt(18.0 / 7.0)).epsilon(1e-13));
  const StatementForm g = statement_form_bounds(kBessel1, BoundFamily::GConvex);
  REQUIRE(g.lower.has_value());
  CHECK(*g.lower == doctest::Approx(bounds_for(kBessel1, BoundFamily::GConvex, 1).lower).epsilon(1e-13));
  CHECK_FALSE(g.upper.has_value());  // 1 - 25 Gamma(1+P)^2/(Gamma(P) Gamma(2+P)) < 0
  const StatementForm h = statement_form_bounds(kBessel1, BoundFamily::HStarlike);
  CHECK_FALSE(h.lower.has_value());
  CHECK_FALSE(h.upper.has_value());
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS((void)bounds_for(kBessel1, BoundFamily::GStarlike, 0), DomainError);
  CHECK_THROWS_AS((void)bounds_for(kBessel1, BoundFamily::GStarlike, 12), DomainError);
  CHECK_THROWS_AS((void)rayleigh_sums_newton(kBessel1, Family::WPrime, 13), DomainError);
  CHECK(parse_bound_family("h-convex") == BoundFamily::HConvex);
  CHECK_THROWS_AS((void)parse_bound_family("f-convex"), DomainError);
  CHECK(auxiliary_family(BoundFamily::FStarlike) == Family::WPrime);
}
