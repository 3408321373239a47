#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "gstruve/error.hpp"
#include "gstruve/struve.hpp"
#include "gstruve/zeros.hpp"

using namespace gstruve;

namespace {

const StruveParams kBessel1 = StruveParams::make(1, 0, 2, 1, 1);

// Sign changes of W (or W') on a uniform grid of step h, independent of the
// adaptive scanner.
std::vector<double> fine_scan(const StruveParams& p, int deriv, int count, double h) {
  std::vector<double> mids;
  double prev = eval_w(p, h, deriv);
  for (int i = 2; static_cast<int>(mids.size()) < count; ++i) {
    const double cur = eval_w(p, i * h, deriv);
    if ((cur > 0) != (prev > 0)) mids.push_back((i - 0.5) * h);
    prev = cur;
  }
  return mids;
}

}  // namespace

TEST_CASE("zeros of J_1 and J_1'") {
  const ZeroSequence w = find_zeros(kBessel1, Family::W, 2);
  CHECK(w.zeros[0] == doctest::Approx(3.8317059702075123).epsilon(1e-13));
  CHECK(w.zeros[1] == doctest::Approx(7.0155866698156188).epsilon(1e-13));
  const ZeroSequence wp = find_zeros(kBessel1, Family::WPrime, 2);
  CHECK(wp.zeros[0] == doctest::Approx(1.8411837813406593).epsilon(1e-13));
  CHECK(wp.zeros[1] == doctest::Approx(5.3314427735250326).epsilon(1e-13));
}

TEST_CASE("sixty-four zeros of J_1 against boost") {
  const ZeroSequence w = find_zeros(kBessel1, Family::W, 64);
  REQUIRE(w.zeros.size() == 64);
  for (int k = 0; k < 64; ++k)
    CHECK(w.zeros[k] == doctest::Approx(boost::math::cyl_bessel_j_zero(1.0, k + 1)).epsilon(1e-12));
}

TEST_CASE("zero sequence invariants") {
  const StruveParams p = StruveParams::make(3, -0.5, 1, 0.5, 0.5);
  for (Family f : {Family::W, Family::WPrime, Family::GPrimeSubst, Family::HPrimeSubst, Family::AlexGSubst,
                   Family::AlexH}) {
    const ZeroSequence seq = find_zeros(p, f, 8);
    REQUIRE(seq.zeros.size() == 8);
    REQUIRE(seq.residuals.size() == 8);
    REQUIRE(seq.brackets.size() == 8);
    for (std::size_t i = 0; i < seq.zeros.size(); ++i) {
      if (i > 0) CHECK(seq.zeros[i] > seq.zeros[i - 1]);
      CHECK(seq.brackets[i].first <= seq.zeros[i]);
      CHECK(seq.zeros[i] <= seq.brackets[i].second);
      CHECK(seq.residuals[i] <= 1e-10);
      const double z = seq.zeros[i];
      const double h = 1e-8 * (1.0 + z);
      CHECK(family_value(p, f, z - h) * family_value(p, f, z + h) < 0);
    }
  }
}

TEST_CASE("c-scaling of zeros") {
  const StruveParams base = StruveParams::make(2, 0.5, 1, 1, 1);
  StruveParams scaled = base;
  scaled.c = 4.0;
  const auto a = find_zeros(base, Family::W, 5).zeros;
  const auto b = find_zeros(scaled, Family::W, 5).zeros;
  for (int i = 0; i < 5; ++i) CHECK(b[i] == doctest::Approx(a[i] / 2).epsilon(1e-12));
  const auto ga = find_zeros(base, Family::GPrimeSubst, 5).zeros;
  const auto gb = find_zeros(scaled, Family::GPrimeSubst, 5).zeros;
  for (int i = 0; i < 5; ++i) CHECK(gb[i] == doctest::Approx(ga[i] / 4).epsilon(1e-12));
}

TEST_CASE("substituted families map onto g', h' and (z g')'") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 2, 0.5);
  for (double s : find_zeros(p, Family::GPrimeSubst, 3).zeros)
    CHECK(std::fabs(eval_normalized(p, Normalization::G, 2 * std::sqrt(s), 1)) <= 1e-9);
  for (double s : find_zeros(p, Family::HPrimeSubst, 3).zeros)
    CHECK(std::fabs(eval_normalized(p, Normalization::H, 4 * s, 1)) <= 1e-9);
  for (double s : find_zeros(p, Family::AlexGSubst, 3).zeros) {
    const double x = 2 * std::sqrt(s);
    CHECK(std::fabs(eval_normalized(p, Normalization::G, x, 1) + x * eval_normalized(p, Normalization::G, x, 2)) <= 1e-9);
  }
}

TEST_CASE("interlacing reports") {
  const InterlacingReport ok = check_interlacing(std::vector<double>{1.8412, 5.3314}, std::vector<double>{3.8317, 7.0156});
  CHECK(ok.interlaced);
  CHECK_FALSE(ok.first_violation.has_value());
  CHECK(ok.worst_margin > 0);

  const InterlacingReport same = check_interlacing(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 2.0});
  CHECK_FALSE(same.interlaced);
  REQUIRE(same.first_violation.has_value());
  CHECK(*same.first_violation == 1);

  CHECK_THROWS_AS((void)check_interlacing(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}), LengthMismatchError);
}

TEST_CASE("q = 2 interlacing agrees with a fine-grid sign scan") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 1, 1);
  const ZeroSequence w = find_zeros(p, Family::W, 5);
  const ZeroSequence wp = find_zeros(p, Family::WPrime, 5);
  CHECK(check_interlacing(wp, w).interlaced);
  const double h = 1e-3;
  const std::vector<double> scan_w = fine_scan(p, 0, 5, h);
  const std::vector<double> scan_wp = fine_scan(p, 1, 5, h);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::fabs(scan_w[i] - w.zeros[i]) <= h);
    CHECK(std::fabs(scan_wp[i] - wp.zeros[i]) <= h);
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::W, Family::WPrime, Family::GPrimeSubst, Family::HPrimeSubst, Family::AlexGSubst,
                   Family::AlexH})
    CHECK(parse_family(to_string(f)) == f);
  CHECK_THROWS_AS((void)parse_family("j"), DomainError);
}

TEST_CASE("zero count limits and scan overflow") {
  CHECK_THROWS_AS((void)find_zeros(kBessel1, Family::W, 0), DomainError);
  CHECK_THROWS_AS((void)find_zeros(kBessel1, Family::W, 65), DomainError);
  // Zeros of (z h')' for q = 3 spread past 1e6 before the tenth.
  CHECK_THROWS_AS((void)find_zeros(StruveParams::make(3, 0, 2, 1, 1), Family::AlexH, 12), ScanOverflowError);
}
