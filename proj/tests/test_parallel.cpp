#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gstruve/grid.hpp"
#include "gstruve/parallel.hpp"
#include "gstruve/radii.hpp"
#include "gstruve/struve.hpp"
#include "gstruve/verify.hpp"

using namespace gstruve;

TEST_CASE("batch evaluation matches the serial loop bit for bit") {
  const StruveParams p = StruveParams::make(2, 0.5, 1, 1, 1);
  std::vector<double> xs;
  for (int i = 1; i <= 200; ++i) xs.push_back(0.1 * i);
  for (int deriv : {0, 1}) {
    const auto par = eval_w_batch(p, xs, deriv);
    const auto ser = eval_w_batch_serial(p, xs, deriv);
    REQUIRE(par.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(par[i] == ser[i]);
      CHECK(ser[i] == eval_w(p, xs[i], deriv));
    }
  }
  for (Family f : {Family::W, Family::GPrimeSubst, Family::AlexH}) {
    const auto par = family_value_batch(p, f, xs);
    const auto ser = family_value_batch_serial(p, f, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) CHECK(par[i] == ser[i]);
  }
}

TEST_CASE("batch evaluation rethrows") {
  const StruveParams p = StruveParams::make(1, 0, 2, 1, 1);
  const std::vector<double> xs = {1.0, -1.0, 2.0};
  CHECK_THROWS((void)eval_w_batch(p, xs, 0));
  CHECK_THROWS((void)eval_w_batch_serial(p, xs, 0));
}

TEST_CASE("map_grid keeps grid order and captures failures") {
  const std::vector<StruveParams> grid = default_grid();
  const auto fn = [](const StruveParams& p) -> double {
    if (p.q == 2 && p.c == 2.0) throw std::runtime_error("boom " + p.to_string());
    return solve_radius({p, RadiusKind::Starlike, Normalization::G, 0.25}).value;
  };
  const auto par = map_grid<double>(grid, fn);
  const auto ser = map_grid_serial<double>(grid, fn);
  REQUIRE(par.size() == grid.size());
  int failures = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(par[i].ok() == ser[i].ok());
    if (par[i].ok()) {
      CHECK(*par[i].value == *ser[i].value);
    } else {
      ++failures;
      CHECK(par[i].error == ser[i].error);
      CHECK(par[i].error == "boom " + grid[i].to_string());
    }
  }
  CHECK(failures == 18);
}

TEST_CASE("verify reports do not depend on the schedule") {
  std::vector<StruveParams> grid = default_grid();
  grid.resize(12);
  for (Suite s : {Suite::Sandwich, Suite::Monotone}) {
    const VerifyReport a = verify_suite(s, grid, true);
    const VerifyReport b = verify_suite(s, grid, false);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].name == b.checks[i].name);
      const double wa = a.checks[i].worst, wb = b.checks[i].worst;
      CHECK((wa == wb || (std::isnan(wa) && std::isnan(wb))));
      CHECK(a.checks[i].samples == b.checks[i].samples);
      CHECK(a.checks[i].status == b.checks[i].status);
    }
  }
}
