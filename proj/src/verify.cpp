#include "gstruve/verify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "gstruve/bessel.hpp"
#include "gstruve/bounds.hpp"
#include "gstruve/error.hpp"
#include "gstruve/parallel.hpp"
#include "gstruve/radii.hpp"
#include "gstruve/special.hpp"
#include "gstruve/struve.hpp"
#include "gstruve/zeros.hpp"

namespace gstruve {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CheckSpec {
  std::string name;
  std::string relation;
  double limit;
  bool informational = false;
};

struct Sample {
  Sample(std::string c, double v, std::string e = {}) : check(std::move(c)), value(v), error(std::move(e)) {}
  std::string check;
  double value;
  std::string error;  // non-empty when the sample could not be computed
};

using Samples = std::vector<Sample>;

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Runs body; if it throws, every check in `checks` receives a failing sample.
template <class F>
void attempt(Samples& samples, std::initializer_list<std::string> checks, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    for (const std::string& c : checks) samples.push_back({c, kNaN, e.what()});
  }
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

bool satisfies(double v, const CheckSpec& spec) {
  if (spec.relation == ">") return v > spec.limit;
  if (spec.relation == ">=") return v >= spec.limit;
  return v <= spec.limit;
}

bool more_extreme(double v, double worst, const CheckSpec& spec) {
  return spec.relation == "<=" ? v > worst : v < worst;
}

std::vector<CheckResult> aggregate(const std::vector<CheckSpec>& specs, const std::vector<StruveParams>& points,
                                   const std::vector<Outcome<Samples>>& outcomes, const std::string& point_kind) {
  std::vector<CheckResult> results;
  std::map<std::string, std::size_t> index;
  for (const CheckSpec& spec : specs) {
    index[spec.name] = results.size();
    CheckResult r;
    r.name = spec.name;
    r.limit = spec.limit;
    r.relation = spec.relation;
    r.worst = spec.relation == "<=" ? -std::numeric_limits<double>::infinity()
                                    : std::numeric_limits<double>::infinity();
    results.push_back(r);
  }
  const auto note_failure = [](CheckResult& r, const std::string& text) {
    if (r.failures++ == 0) r.detail = text;
  };
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const std::string where = point_kind + "[" + std::to_string(i) + "] " + points[i].to_string();
    if (!outcomes[i].ok()) {
      for (CheckResult& r : results) note_failure(r, where + ": " + outcomes[i].error);
      continue;
    }
    for (const Sample& s : *outcomes[i].value) {
      CheckResult& r = results.at(index.at(s.check));
      const CheckSpec& spec = specs[index.at(s.check)];
      ++r.samples;
      if (!s.error.empty()) {
        note_failure(r, where + ": " + s.error);
        continue;
      }
      if (std::isnan(s.value) || more_extreme(s.value, r.worst, spec)) r.worst = s.value;
      if (std::isnan(s.value) || !satisfies(s.value, spec)) note_failure(r, where + ": value " + fmt(s.value));
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    CheckResult& r = results[i];
    if (r.samples == 0 && r.failures == 0) note_failure(r, "no samples");
    if (specs[i].informational)
      r.status = CheckStatus::Info;
    else
      r.status = r.failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    if (std::isinf(r.worst)) r.worst = kNaN;
  }
  return results;
}

template <class F>
std::vector<CheckResult> run_points(const std::vector<CheckSpec>& specs, const std::vector<StruveParams>& points,
                                    bool parallel, const std::string& point_kind, F point_fn) {
  const auto outcomes = parallel ? map_grid<Samples>(points, point_fn) : map_grid_serial<Samples>(points, point_fn);
  return aggregate(specs, points, outcomes, point_kind);
}

constexpr std::array kAllFamilies = {Family::W,           Family::WPrime,     Family::GPrimeSubst,
                                     Family::HPrimeSubst, Family::AlexGSubst, Family::AlexH};
constexpr std::array kBoundFamilies = {BoundFamily::FStarlike, BoundFamily::GStarlike, BoundFamily::HStarlike,
                                       BoundFamily::GConvex, BoundFamily::HConvex};
constexpr std::array kNormalizations = {Normalization::F, Normalization::G, Normalization::H};
constexpr std::array kAlphas = {0.0, 0.25, 0.5, 0.75};

std::pair<RadiusKind, Normalization> radius_of(BoundFamily bf) {
  switch (bf) {
    case BoundFamily::FStarlike: return {RadiusKind::Starlike, Normalization::F};
    case BoundFamily::GStarlike: return {RadiusKind::Starlike, Normalization::G};
    case BoundFamily::HStarlike: return {RadiusKind::Starlike, Normalization::H};
    case BoundFamily::GConvex: return {RadiusKind::Convex, Normalization::G};
    case BoundFamily::HConvex: return {RadiusKind::Convex, Normalization::H};
  }
  return {RadiusKind::Starlike, Normalization::F};
}

double radius(const StruveParams& params, RadiusKind kind, Normalization n, double alpha) {
  return solve_radius({params, kind, n, alpha}).value;
}

std::string radius_label(RadiusKind kind, Normalization n) {
  return std::string(to_string(kind)) + "-" + std::string(to_string(n));
}

// Interlacing -------------------------------------------------------------

std::vector<CheckResult> interlacing_suite(const std::vector<StruveParams>& grid, bool parallel) {
  const std::vector<CheckSpec> specs = {
      {"interlacing.w-prime-w", ">", 0.0},
      {"interlacing.sign-change", ">", 0.0},
      {"interlacing.substituted.g-prime", "<=", 1e-9},
      {"interlacing.substituted.h-prime", "<=", 1e-9},
      {"interlacing.substituted.alex-g", "<=", 1e-9},
      {"interlacing.substituted.g-prime.absolute", "<=", 1e-9, true},
      {"interlacing.substituted.h-prime.absolute", "<=", 1e-9, true},
      {"interlacing.substituted.alex-g.absolute", "<=", 1e-9, true},
  };
  return run_points(specs, grid, parallel, "grid", [](const StruveParams& params) {
    Samples s;
    attempt(s, {"interlacing.w-prime-w"}, [&] {
      const ZeroSequence w = find_zeros(params, Family::W, kVerifyZeroCount);
      const ZeroSequence wp = find_zeros(params, Family::WPrime, kVerifyZeroCount);
      const InterlacingReport report = check_interlacing(wp, w);
      s.push_back({"interlacing.w-prime-w", report.interlaced ? report.worst_margin : -1.0});
    });
    attempt(s, {"interlacing.sign-change"}, [&] {
      double worst = 1.0;
      for (Family f : kAllFamilies) {
        for (double z : find_zeros(params, f, kVerifyZeroCount).zeros) {
          const double h = 1e-8 * (1.0 + z);
          worst = std::min(worst, family_value(params, f, z - h) * family_value(params, f, z + h) < 0 ? 1.0 : -1.0);
        }
      }
      s.push_back({"interlacing.sign-change", worst});
    });
    // Residual of the named function at the mapped zero, absolute and relative
    // to |x F'(x)|, the change one relative unit of x produces.
    const auto substituted = [&](const std::string& name, Family family, auto map, auto target) {
      attempt(s, {name, name + ".absolute"}, [&] {
        double worst_scaled = 0.0;
        double worst_absolute = 0.0;
        for (double z : find_zeros(params, family, kVerifyZeroCount).zeros) {
          const double x = map(z);
          const double h = 1e-6 * x;
          const double slope = (target(x + h) - target(x - h)) / (2.0 * h);
          const double value = std::fabs(target(x));
          worst_absolute = std::max(worst_absolute, value);
          worst_scaled = std::max(worst_scaled, value / std::max(1.0, std::fabs(x * slope)));
        }
        s.push_back({name, worst_scaled});
        s.push_back({name + ".absolute", worst_absolute});
      });
    };
    const auto two_sqrt = [](double z) { return 2.0 * std::sqrt(z); };
    const auto g_prime = [&](double x) { return eval_normalized(params, Normalization::G, x, 1); };
    substituted("interlacing.substituted.g-prime", Family::GPrimeSubst, two_sqrt, g_prime);
    substituted(
        "interlacing.substituted.h-prime", Family::HPrimeSubst, [](double z) { return 4.0 * z; },
        [&](double x) { return eval_normalized(params, Normalization::H, x, 1); });
    substituted("interlacing.substituted.alex-g", Family::AlexGSubst, two_sqrt,
                [&](double x) { return g_prime(x) + x * eval_normalized(params, Normalization::G, x, 2); });
    return s;
  });
}

// Sandwich, tightening, sums ----------------------------------------------

std::vector<CheckResult> sandwich_suite(const std::vector<StruveParams>& grid, bool parallel) {
  std::vector<CheckSpec> specs;
  for (BoundFamily bf : kBoundFamilies) specs.push_back({"sandwich." + std::string(to_string(bf)), ">=", 1e-9});
  for (BoundFamily bf : kBoundFamilies) specs.push_back({"tightening." + std::string(to_string(bf)), ">=", 0.0});
  for (BoundFamily bf : kBoundFamilies) specs.push_back({"tightening.gap." + std::string(to_string(bf)), ">", 0.0});
  for (BoundFamily bf : kBoundFamilies)
    specs.push_back({"newton-closed-form." + std::string(to_string(auxiliary_family(bf))), "<=", 1e-11});
  specs.push_back({"f-starlike.closed-form-consistency", "<=", 1e-11});
  for (BoundFamily bf : kBoundFamilies)
    specs.push_back({"convergence.k8." + std::string(to_string(bf)), "<=", 1e-4, true});
  specs.push_back({"statement-form.f-starlike", ">", 0.0, true});
  specs.push_back({"statement-form.g-convex", ">", 0.0, true});

  return run_points(specs, grid, parallel, "grid", [](const StruveParams& params) {
    Samples s;
    for (BoundFamily bf : kBoundFamilies) {
      const std::string name(to_string(bf));
      const auto [kind, norm] = radius_of(bf);
      double r = kNaN;
      attempt(s, {"sandwich." + name, "tightening." + name, "tightening.gap." + name, "convergence.k8." + name}, [&] {
        r = radius(params, kind, norm, 0.0);
      });
      if (std::isnan(r)) continue;
      attempt(s, {"sandwich." + name}, [&] {
        const BoundsPair b = bounds_for(params, bf, 1);
        s.push_back({"sandwich." + name, std::min(r - b.lower, b.upper - r) / r});
      });
      attempt(s, {"tightening." + name, "tightening.gap." + name}, [&] {
        std::vector<BoundsPair> pairs;
        for (int k = 1; k <= 4; ++k) pairs.push_back(bounds_for(params, bf, k));
        double worst = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k)
          worst = std::min({worst, (pairs[k + 1].lower - pairs[k].lower) / r, (pairs[k].upper - pairs[k + 1].upper) / r});
        const double gap1 = pairs[0].upper - pairs[0].lower;
        const double gap4 = pairs[3].upper - pairs[3].lower;
        s.push_back({"tightening." + name, worst});
        s.push_back({"tightening.gap." + name, (gap1 - gap4) / gap1});
      });
      attempt(s, {"convergence.k8." + name}, [&] {
        const BoundsPair b = bounds_for(params, bf, 8);
        s.push_back({"convergence.k8." + name, (b.upper - b.lower) / r});
      });
      const std::string sums_name = "newton-closed-form." + std::string(to_string(auxiliary_family(bf)));
      attempt(s, {sums_name}, [&] {
        const RayleighSums closed = rayleigh_sums_closed_form(params, auxiliary_family(bf));
        const RayleighSums newton = rayleigh_sums_newton(params, auxiliary_family(bf), 2);
        s.push_back({sums_name, std::max(rel_err(newton.sums[0], closed.sums[0]), rel_err(newton.sums[1], closed.sums[1]))});
      });
      if (bf == BoundFamily::FStarlike || bf == BoundFamily::GConvex) {
        const std::string stmt = "statement-form." + name;
        attempt(s, {stmt}, [&] {
          const StatementForm form = statement_form_bounds(params, bf);
          if (!form.lower || !form.upper) throw PrecisionLossError("alternative bound is not a real number");
          s.push_back({stmt, std::min(r - *form.lower, *form.upper - r) / r});
        });
      }
    }
    attempt(s, {"f-starlike.closed-form-consistency"}, [&] {
      const RayleighSums tau = rayleigh_sums_closed_form(params, Family::WPrime);
      const BoundsPair b = bounds_for(params, BoundFamily::FStarlike, 1);
      const double p = params.p;
      const double r1 = gamma_ratio(params.shift(), params.q + params.shift());
      const double display = 2.0 * std::sqrt((p + 1.0) / (params.c * (p + 3.0) * r1));
      s.push_back({"f-starlike.closed-form-consistency",
                   std::max({rel_err(b.lower, 1.0 / std::sqrt(tau.sums[0])), rel_err(b.lower, display),
                             rel_err(b.upper, std::sqrt(tau.sums[0] / tau.sums[1]))})});
    });
    return s;
  });
}

// Bessel specialization ---------------------------------------------------

std::vector<CheckResult> bessel_suite(bool parallel) {
  std::vector<CheckSpec> specs = {
      {"bessel.dual-path", "<=", 1e-10},
      {"bessel.dual-path-relative", "<=", 1e-10},
  };
  for (BoundFamily bf : kBoundFamilies) specs.push_back({"bessel.corollary." + std::string(to_string(bf)), "<=", 1e-11});
  specs.push_back({"bessel.first-zeros.w", "<=", 1e-9});
  specs.push_back({"bessel.first-zeros.w-prime", "<=", 1e-9});
  specs.push_back({"bessel.known-values", "<=", 1e-8});

  std::vector<StruveParams> orders;
  for (double nu : {0.5, 1.0, 2.0, 3.5}) orders.push_back(bessel::reduce_to_bessel(nu));

  return run_points(specs, orders, parallel, "nu", [](const StruveParams& params) {
    Samples s;
    const double nu = params.p + 1.0;
    attempt(s, {"bessel.dual-path", "bessel.dual-path-relative"}, [&] {
      double mixed = 0.0;
      double relative = 0.0;
      for (int i = 1; i <= 20; ++i) {
        const double x = 0.5 * i;
        const double w = eval_w(params, x);
        const double j = bessel::bessel_j(nu, x);
        mixed = std::max(mixed, std::fabs(w - j) / (1.0 + std::fabs(j)));
        relative = std::max(relative, rel_err(w, j));
      }
      s.push_back({"bessel.dual-path", mixed});
      s.push_back({"bessel.dual-path-relative", relative});
    });
    for (BoundFamily bf : kBoundFamilies) {
      const std::string name = "bessel.corollary." + std::string(to_string(bf));
      attempt(s, {name}, [&] {
        const BoundsPair general = bounds_for(params, bf, 1);
        const BoundsPair closed = bessel::corollary_bounds(nu, bf);
        s.push_back({name, std::max(rel_err(general.lower, closed.lower), rel_err(general.upper, closed.upper))});
      });
    }
    const auto zero_check = [&](const std::string& name, Family family, bool derivative) {
      attempt(s, {name}, [&] {
        const std::vector<double> ours = find_zeros(params, family, 3).zeros;
        const std::vector<double> oracle = bessel::bessel_j_zeros(nu, 3, derivative);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) worst = std::max(worst, rel_err(ours[i], oracle[i]));
        s.push_back({name, worst});
      });
    };
    zero_check("bessel.first-zeros.w", Family::W, false);
    zero_check("bessel.first-zeros.w-prime", Family::WPrime, true);
    if (nu == 1.0) {
      attempt(s, {"bessel.known-values"}, [&] {
        const double j11 = find_zeros(params, Family::W, 1).zeros[0];
        const double jp11 = find_zeros(params, Family::WPrime, 1).zeros[0];
        const double oracle_j = bessel::bessel_j_zeros(1.0, 1, false)[0];
        const double oracle_jp = bessel::bessel_j_zeros(1.0, 1, true)[0];
        s.push_back({"bessel.known-values", std::max({std::fabs(j11 - 3.8317059702), std::fabs(jp11 - 1.8411837813),
                                                      std::fabs(oracle_j - 3.8317059702),
                                                      std::fabs(oracle_jp - 1.8411837813)})});
      });
    }
    return s;
  });
}

// Monotonicity, containment, residuals ------------------------------------

std::vector<CheckResult> monotone_suite(const std::vector<StruveParams>& grid, bool parallel) {
  std::vector<CheckSpec> specs;
  for (RadiusKind kind : {RadiusKind::Starlike, RadiusKind::Convex})
    for (Normalization n : kNormalizations) specs.push_back({"monotone-alpha." + radius_label(kind, n), ">", 0.0});
  for (Normalization n : kNormalizations)
    specs.push_back({"containment." + std::string(to_string(n)), ">=", 0.0});
  for (RadiusKind kind : {RadiusKind::Starlike, RadiusKind::Convex})
    for (Normalization n : kNormalizations) specs.push_back({"search-interval." + radius_label(kind, n), ">", 0.0});
  for (RadiusKind kind : {RadiusKind::Starlike, RadiusKind::Convex})
    for (Normalization n : kNormalizations) specs.push_back({"residual." + radius_label(kind, n), "<=", 1e-9});
  specs.push_back({"alexander.g", "<=", 1e-9});

  return run_points(specs, grid, parallel, "grid", [](const StruveParams& params) {
    Samples s;
    std::map<std::pair<RadiusKind, Normalization>, std::vector<double>> radii;
    for (RadiusKind kind : {RadiusKind::Starlike, RadiusKind::Convex}) {
      for (Normalization n : kNormalizations) {
        const std::string label = radius_label(kind, n);
        attempt(s, {"monotone-alpha." + label, "residual." + label}, [&] {
          std::vector<double> values;
          double worst_residual = 0.0;
          for (double alpha : kAlphas) {
            const RadiusResult r = solve_radius({params, kind, n, alpha});
            values.push_back(r.value);
            const auto quotient = [&](double x) {
              return kind == RadiusKind::Starlike ? starlike_quotient(params, n, x) : convex_quotient(params, n, x);
            };
            const double h = 1e-6 * r.value;
            const double slope = (quotient(r.value + h) - quotient(r.value - h)) / (2.0 * h);
            worst_residual = std::max(worst_residual, std::fabs(quotient(r.value) - alpha) / (std::fabs(slope) * r.value));
          }
          double worst = std::numeric_limits<double>::infinity();
          for (std::size_t i = 0; i + 1 < values.size(); ++i) worst = std::min(worst, (values[i] - values[i + 1]) / values[0]);
          s.push_back({"monotone-alpha." + label, worst});
          s.push_back({"residual." + label, worst_residual});
          radii[{kind, n}] = values;
        });
      }
    }
    for (Normalization n : kNormalizations) {
      const std::string name = "containment." + std::string(to_string(n));
      const auto star = radii.find({RadiusKind::Starlike, n});
      const auto conv = radii.find({RadiusKind::Convex, n});
      if (star == radii.end() || conv == radii.end()) {
        s.push_back({name, kNaN, "radii unavailable"});
        continue;
      }
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < kAlphas.size(); ++i)
        worst = std::min(worst, (star->second[i] - conv->second[i]) / star->second[i]);
      s.push_back({name, worst});
    }
    attempt(s, {"search-interval.starlike-f", "search-interval.starlike-g", "search-interval.starlike-h",
                "search-interval.convex-f", "search-interval.convex-g", "search-interval.convex-h"},
            [&] {
              const double omega = find_zeros(params, Family::W, 1).zeros[0];
              const double omega_prime = find_zeros(params, Family::WPrime, 1).zeros[0];
              const double beta = 2.0 * std::sqrt(find_zeros(params, Family::GPrimeSubst, 1).zeros[0]);
              const double varsigma = 4.0 * find_zeros(params, Family::HPrimeSubst, 1).zeros[0];
              const std::map<std::pair<RadiusKind, Normalization>, double> limits = {
                  {{RadiusKind::Starlike, Normalization::F}, omega},
                  {{RadiusKind::Starlike, Normalization::G}, omega},
                  {{RadiusKind::Starlike, Normalization::H}, omega * omega},
                  {{RadiusKind::Convex, Normalization::F}, omega_prime},
                  {{RadiusKind::Convex, Normalization::G}, beta},
                  {{RadiusKind::Convex, Normalization::H}, varsigma},
              };
              for (const auto& [key, limit] : limits) {
                const auto it = radii.find(key);
                if (it == radii.end()) continue;
                s.push_back({"search-interval." + radius_label(key.first, key.second), (limit - it->second[0]) / limit});
              }
            });
    attempt(s, {"alexander.g"}, [&] {
      const double rc = radius(params, RadiusKind::Convex, Normalization::G, 0.0);
      const double rho = 2.0 * std::sqrt(find_zeros(params, Family::AlexGSubst, 1).zeros[0]);
      s.push_back({"alexander.g", rel_err(rc, rho)});
    });
    return s;
  });
}

// c-scaling ---------------------------------------------------------------

std::vector<CheckResult> scaling_suite(const std::vector<StruveParams>& grid, bool parallel) {
  const std::vector<CheckSpec> specs = {
      {"scaling.zeros", "<=", 1e-9},
      {"scaling.radii", "<=", 1e-9},
  };
  std::vector<StruveParams> bases;
  std::set<std::tuple<int, double, double, double>> seen;
  for (StruveParams params : grid) {
    params.c = 1.0;
    if (seen.insert({params.q, params.p, params.b, params.delta}).second) bases.push_back(params);
  }
  return run_points(specs, bases, parallel, "base", [](const StruveParams& base) {
    Samples s;
    for (double c : {0.25, 4.0}) {
      StruveParams scaled = base;
      scaled.c = c;
      attempt(s, {"scaling.zeros"}, [&] {
        double worst = 0.0;
        for (Family f : kAllFamilies) {
          const bool squared = f == Family::W || f == Family::WPrime;
          const double factor = squared ? 1.0 / std::sqrt(c) : 1.0 / c;
          const std::vector<double> z1 = find_zeros(base, f, kVerifyZeroCount).zeros;
          const std::vector<double> zc = find_zeros(scaled, f, kVerifyZeroCount).zeros;
          for (int i = 0; i < kVerifyZeroCount; ++i) worst = std::max(worst, rel_err(zc[i], z1[i] * factor));
        }
        s.push_back({"scaling.zeros", worst});
      });
      attempt(s, {"scaling.radii"}, [&] {
        double worst = 0.0;
        for (RadiusKind kind : {RadiusKind::Starlike, RadiusKind::Convex}) {
          for (Normalization n : kNormalizations) {
            const double factor = n == Normalization::H ? 1.0 / c : 1.0 / std::sqrt(c);
            for (double alpha : {0.0, 0.5})
              worst = std::max(worst, rel_err(radius(scaled, kind, n, alpha), radius(base, kind, n, alpha) * factor));
          }
        }
        s.push_back({"scaling.radii", worst});
      });
    }
    return s;
  });
}

}  // namespace

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Interlacing: return "interlacing";
    case Suite::Sandwich: return "sandwich";
    case Suite::Bessel: return "bessel";
    case Suite::Monotone: return "monotone";
    case Suite::Scaling: return "scaling";
    case Suite::All: return "all";
  }
  return "?";
}

Suite parse_suite(std::string_view s) {
  for (Suite suite : {Suite::Interlacing, Suite::Sandwich, Suite::Bessel, Suite::Monotone, Suite::Scaling, Suite::All})
    if (s == to_string(suite)) return suite;
  throw DomainError("unknown suite '" + std::string(s) +
                    "' (expected interlacing, sandwich, bessel, monotone, scaling or all)");
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Info: return "info";
  }
  return "?";
}

bool VerifyReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

VerifyReport verify_suite(Suite suite, const std::vector<StruveParams>& grid, bool parallel) {
  if (grid.empty()) throw DomainError("verification grid is empty");
  VerifyReport report;
  report.suite = suite;
  report.grid_size = static_cast<int>(grid.size());
  const auto append = [&](std::vector<CheckResult> more) {
    report.checks.insert(report.checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Interlacing) append(interlacing_suite(grid, parallel));
  if (all || suite == Suite::Sandwich) append(sandwich_suite(grid, parallel));
  if (all || suite == Suite::Bessel) append(bessel_suite(parallel));
  if (all || suite == Suite::Monotone) append(monotone_suite(grid, parallel));
  if (all || suite == Suite::Scaling) append(scaling_suite(grid, parallel));
  std::stable_partition(report.checks.begin(), report.checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
  return report;
}

}  // namespace gstruve
