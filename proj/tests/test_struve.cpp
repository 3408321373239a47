#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "gstruve/error.hpp"
#include "gstruve/struve.hpp"
#include "gstruve/zeros.hpp"

using namespace gstruve;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {
const StruveParams kBessel1 = StruveParams::make(1, 0, 2, 1, 1);

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("params validation") {
  CHECK_NOTHROW((void)StruveParams::make(1, -0.5, 1, 0.5, 0.5));
  CHECK_THROWS_AS((void)StruveParams::make(0, 0, 2, 1, 1), DomainError);
  CHECK_THROWS_AS((void)StruveParams::make(1, -1, 2, 1, 1), DomainError);
  CHECK_THROWS_AS((void)StruveParams::make(1, 0, 0, 1, 1), DomainError);
  CHECK_THROWS_AS((void)StruveParams::make(1, 0, 2, -1, 1), DomainError);
  CHECK_THROWS_AS((void)StruveParams::make(1, 0, 2, 1, 0), DomainError);
  CHECK(kBessel1.shift() == 2.0);
  CHECK(parse_normalization("G") == Normalization::G);
  CHECK_THROWS_AS((void)parse_normalization("k"), DomainError);
}

TEST_CASE("coefficient examples") {
  const SeriesTerm a0 = coefficient(kBessel1, 0);
  CHECK(a0.sign == 1);
  CHECK(a0.value() == doctest::Approx(1.0).epsilon(1e-15));
  const SeriesTerm a1 = coefficient(kBessel1, 1);
  CHECK(a1.sign == -1);
  CHECK(a1.value() == doctest::Approx(-0.5).epsilon(1e-14));

  const StruveParams p = StruveParams::make(2, 0.5, 1, 2, 0.5);
  const SeriesTerm a3 = coefficient(p, 3);
  CHECK(a3.sign == -1);
  const Big want = Big(8) / (boost::math::tgamma(Big(4)) * boost::math::tgamma(Big(6) + Big(2.5)));
  CHECK(std::fabs(a3.log_magnitude - static_cast<double>(log(want))) <= 1e-12 * std::fabs(a3.log_magnitude));
}

TEST_CASE("eval_w reduces to J_1") {
  CHECK(eval_w(kBessel1, 2.0) == doctest::Approx(0.5767248077568734).epsilon(1e-14));
  CHECK(std::fabs(eval_w(kBessel1, 3.8317059702)) < 1e-9);
  for (double x = 0.25; x <= 10.0; x += 0.25) {
    CHECK(rel(eval_w(kBessel1, x), boost::math::cyl_bessel_j(1, x)) <= 1e-11);
    CHECK(rel(eval_w(kBessel1, x, 1), boost::math::cyl_bessel_j_prime(1, x)) <= 1e-10);
  }
}

TEST_CASE("eval_w normalisation near the origin") {
  for (const StruveParams& p : {StruveParams::make(2, 0.5, 1, 2, 0.5), StruveParams::make(3, -0.5, 1, 0.5, 2)}) {
    const double x = 1e-6;
    const double scale = std::exp((p.p + 1) * std::log(2.0) + std::lgamma(p.shift()) - (p.p + 1) * std::log(x));
    CHECK(eval_w(p, x) * scale == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(eval_normalized(p, Normalization::G, x) / x == doctest::Approx(1.0).epsilon(1e-10));
    // h(x) = x + O(x) in the linear variable, so it needs a smaller abscissa
    CHECK(eval_normalized(p, Normalization::H, 1e-12) / 1e-12 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(eval_normalized(p, Normalization::F, x) / x == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(log_derivative(p, x) == doctest::Approx(p.p + 1.0).epsilon(1e-10));
  }
}

TEST_CASE("f at p = 1 against the defining root") {
  const StruveParams p = StruveParams::make(1, 1, 2, 1, 1);
  // W = J_2 here; f = (2^2 Gamma(3) J_2(1))^(1/2).
  const double want = std::sqrt(8.0 * boost::math::cyl_bessel_j(2, 1.0));
  CHECK(eval_normalized(p, Normalization::F, 1.0) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("normalized derivatives match central differences") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 1, 1);
  for (Normalization n : {Normalization::F, Normalization::G, Normalization::H}) {
    for (double x : {0.3, 1.0, 2.2}) {
      const double h = 1e-5;
      const double d1 = (eval_normalized(p, n, x + h) - eval_normalized(p, n, x - h)) / (2 * h);
      const double d2 = (eval_normalized(p, n, x + h, 1) - eval_normalized(p, n, x - h, 1)) / (2 * h);
      CHECK(eval_normalized(p, n, x, 1) == doctest::Approx(d1).epsilon(1e-8));
      CHECK(eval_normalized(p, n, x, 2) == doctest::Approx(d2).epsilon(1e-6));
    }
  }
}

TEST_CASE("W derivative consistency by finite differences") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 2, 0.5);
  for (double x = 0.1; x <= 5.0; x += 0.1) {
    const double h = 1e-5;
    const double fd = (eval_w(p, x + h) - eval_w(p, x - h)) / (2 * h);
    CHECK(std::fabs(fd - eval_w(p, x, 1)) <= 1e-6);
    const double fd2 = (eval_w(p, x + h, 1) - eval_w(p, x - h, 1)) / (2 * h);
    CHECK(std::fabs(fd2 - eval_w(p, x, 2)) <= 1e-6);
  }
}

TEST_CASE("log_derivative") {
  const double want = boost::math::cyl_bessel_j_prime(1, 1.0) / boost::math::cyl_bessel_j(1, 1.0);
  CHECK(log_derivative(kBessel1, 1.0) == doctest::Approx(want).epsilon(1e-13));
  CHECK(log_derivative(kBessel1, 1.0) == doctest::Approx(0.73888573574470373).epsilon(1e-13));
  CHECK(log_derivative(kBessel1, 3.8317) < -1e3);
}

TEST_CASE("c-scaling law") {
  for (double c : {0.25, 0.5, 2.0, 4.0}) {
    const StruveParams base = StruveParams::make(2, 0.5, 1, 1, 0.5);
    StruveParams scaled = base;
    scaled.c = c;
    for (double x : {0.4, 1.3, 2.9, 6.0}) {
      const double want = std::pow(c, -(base.p + 1) / 2) * eval_w(base, std::sqrt(c) * x);
      CHECK(rel(eval_w(scaled, x), want) <= 1e-10);
    }
  }
}

TEST_CASE("truncated Weierstrass product converges on (0, omega_1)") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 1, 1);
  const std::vector<double> omega = find_zeros(p, Family::W, 40).zeros;
  const double scale = std::exp((p.p + 1) * std::log(2.0) + std::lgamma(p.shift()));
  for (double fraction : {0.3, 0.7, 0.95}) {
    const double x = fraction * omega[0];
    const double lhs = scale * eval_w(p, x);
    double product = std::pow(x, p.p + 1);
    double prev_err = INFINITY;
    for (std::size_t n = 0; n < omega.size(); ++n) {
      product *= 1.0 - x * x / (omega[n] * omega[n]);
      const double err = std::fabs(lhs - product);
      CHECK(err <= prev_err);
      prev_err = err;
    }
    CHECK(prev_err <= 1e-3 * std::fabs(lhs));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)eval_w(kBessel1, 0.0), DomainError);
  CHECK_THROWS_AS((void)eval_w(kBessel1, -1.0), DomainError);
  CHECK_THROWS_AS((void)eval_w(kBessel1, 1.0, 3), DomainError);
  CHECK_THROWS_AS((void)eval_normalized(kBessel1, Normalization::F, 5.0), BranchError);
  CHECK_NOTHROW((void)eval_normalized(kBessel1, Normalization::G, 5.0));
}
