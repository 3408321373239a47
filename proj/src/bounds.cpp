#include "gstruve/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "entire.hpp"
#include "gstruve/error.hpp"
#include "gstruve/special.hpp"

namespace gstruve {

namespace {

struct GammaRatios {
  double r1;  // Gamma(P) / Gamma(q + P)
  double r2;  // Gamma(P) / Gamma(2q + P)
};

GammaRatios gamma_ratios(const StruveParams& params) {
  const double shift = params.shift();
  return {gamma_ratio(shift, params.q + shift), gamma_ratio(shift, 2.0 * params.q + shift)};
}

Weight weight_of(const StruveParams& params, Family family) {
  switch (family) {
    case Family::W: return detail::unit_weight();
    case Family::WPrime: return detail::w_prime_weight(params);
    case Family::GPrimeSubst: return detail::g_prime_weight();
    case Family::HPrimeSubst: return detail::h_prime_weight();
    case Family::AlexGSubst: return detail::alexander_g_weight();
    case Family::AlexH: return detail::alexander_h_weight();
  }
  throw DomainError("unknown family");
}

// Series variable t per unit of the power-sum variable u.
Accum t_per_u(Family family) {
  switch (family) {
    case Family::W:
    case Family::WPrime:
    case Family::AlexH: return Accum(1) / 4;
    default: return 1;
  }
}

bool relative_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

std::string_view to_string(BoundFamily f) noexcept {
  switch (f) {
    case BoundFamily::FStarlike: return "f-starlike";
    case BoundFamily::GStarlike: return "g-starlike";
    case BoundFamily::HStarlike: return "h-starlike";
    case BoundFamily::GConvex: return "g-convex";
    case BoundFamily::HConvex: return "h-convex";
  }
  return "?";
}

BoundFamily parse_bound_family(std::string_view s) {
  for (BoundFamily f : {BoundFamily::FStarlike, BoundFamily::GStarlike, BoundFamily::HStarlike,
                        BoundFamily::GConvex, BoundFamily::HConvex})
    if (s == to_string(f)) return f;
  throw DomainError("unknown bound family '" + std::string(s) +
                    "' (expected f-starlike, g-starlike, h-starlike, g-convex or h-convex)");
}

Family auxiliary_family(BoundFamily f) noexcept {
  switch (f) {
    case BoundFamily::FStarlike: return Family::WPrime;
    case BoundFamily::GStarlike: return Family::GPrimeSubst;
    case BoundFamily::HStarlike: return Family::HPrimeSubst;
    case BoundFamily::GConvex: return Family::AlexGSubst;
    case BoundFamily::HConvex: return Family::AlexH;
  }
  return Family::WPrime;
}

RayleighSums rayleigh_sums_closed_form(const StruveParams& params, Family family) {
  params.validate();
  const auto [r1, r2] = gamma_ratios(params);
  const double c = params.c;
  const double p = params.p;
  RayleighSums out;
  out.family = family;
  out.source = SumSource::ClosedForm;
  switch (family) {
    case Family::WPrime: {
      const double s1 = c * (p + 3.0) * r1 / (4.0 * (p + 1.0));
      out.sums = {s1, s1 * s1 - c * c * (p + 5.0) * r2 / (16.0 * (p + 1.0))};
      break;
    }
    case Family::GPrimeSubst:
      out.sums = {3.0 * c * r1, 9.0 * c * c * r1 * r1 - 5.0 * c * c * r2};
      break;
    case Family::HPrimeSubst:
      out.sums = {2.0 * c * r1, 4.0 * c * c * r1 * r1 - 3.0 * c * c * r2};
      break;
    case Family::AlexGSubst:
      out.sums = {9.0 * c * r1, 81.0 * c * c * r1 * r1 - 25.0 * c * c * r2};
      break;
    case Family::AlexH:
      out.sums = {c * r1, c * c * r1 * r1 - 9.0 * c * c * r2 / 16.0};
      break;
    case Family::W:
      throw DomainError("no closed-form Rayleigh sums for family w");
  }
  return out;
}

std::vector<double> family_coefficients(const StruveParams& params, Family family, int count) {
  params.validate();
  const Weight weight = weight_of(params, family);
  const Accum scale = t_per_u(family);
  const Accum shift = params.shift();
  std::vector<double> out;
  out.reserve(count);
  Accum e = 1;
  Accum power = 1;
  for (int n = 1; n <= count; ++n) {
    Accum denom = n;
    const Accum base = shift + Accum(params.q) * (n - 1);
    for (int j = 0; j < params.q; ++j) denom *= base + j;
    e *= -Accum(params.c) / denom;
    power *= scale;
    out.push_back(double(e * power * weight.at(n) / weight.at(0)));
  }
  return out;
}

std::vector<double> newton_power_sums(std::span<const double> coeffs) {
  constexpr Accum eps = std::numeric_limits<double>::epsilon();
  const std::size_t K = coeffs.size();
  std::vector<Accum> sums(K), errs(K);
  std::vector<double> out(K);
  for (std::size_t k = 1; k <= K; ++k) {
    Accum s = -Accum(k) * coeffs[k - 1];
    Accum magnitude = std::fabs(s) * (1 + k);
    Accum propagated = 0;
    for (std::size_t i = 1; i < k; ++i) {
      const Accum prod = Accum(coeffs[i - 1]) * sums[k - i - 1];
      s -= prod;
      magnitude += std::fabs(prod) * (1 + i);
      propagated += std::fabs(Accum(coeffs[i - 1])) * errs[k - i - 1];
    }
    sums[k - 1] = s;
    errs[k - 1] = eps * (k + 1) * magnitude + propagated;
    if (!(s > 0))
      throw PrecisionLossError("Newton power sum S_" + std::to_string(k) + " is not positive (" +
                               std::to_string(double(s)) + ")");
    if (errs[k - 1] > 1e-6 * s)
      throw PrecisionLossError("Newton power sum S_" + std::to_string(k) + " lost precision: error bound " +
                               std::to_string(double(errs[k - 1] / s)) + " relative");
    out[k - 1] = double(s);
  }
  return out;
}

RayleighSums rayleigh_sums_newton(const StruveParams& params, Family family, int K) {
  if (K < 1 || K > kMaxNewtonOrder)
    throw DomainError("Newton order K must be in [1, 12], got " + std::to_string(K));
  const std::vector<double> coeffs = family_coefficients(params, family, K);
  return {family, newton_power_sums(coeffs), SumSource::Newton};
}

BoundsPair bounds_for(const StruveParams& params, BoundFamily bf, int k) {
  if (k < 1 || k + 1 > kMaxNewtonOrder) throw DomainError("bound index k must be in [1, 11], got " + std::to_string(k));
  const Family family = auxiliary_family(bf);
  const RayleighSums sums = rayleigh_sums_newton(params, family, k + 1);

  if (k == 1) {
    const RayleighSums closed = rayleigh_sums_closed_form(params, family);
    for (int i = 0; i < 2; ++i)
      if (!relative_close(closed.sums[i], sums.sums[i], 1e-9))
        throw PrecisionLossError("Newton and closed-form S_" + std::to_string(i + 1) + " disagree for " +
                                 params.to_string());
  }

  const double sk = sums.sums[k - 1];
  const double sk1 = sums.sums[k];
  const double root_lower = std::pow(sk, -1.0 / k);  // lower bound on u_1
  const double ratio_upper = sk / sk1;               // upper bound on u_1

  BoundsPair out;
  out.k = k;
  out.family = family;
  out.sums = sums.sums;
  out.radius_kind =
      (bf == BoundFamily::GConvex || bf == BoundFamily::HConvex) ? RadiusTag::Convex0 : RadiusTag::Starlike0;
  switch (bf) {
    case BoundFamily::FStarlike:
      out.lower = std::sqrt(root_lower);
      out.upper = std::sqrt(ratio_upper);
      break;
    case BoundFamily::GStarlike:
    case BoundFamily::GConvex:
      out.lower = 2.0 * std::sqrt(root_lower);
      out.upper = 2.0 * std::sqrt(ratio_upper);
      break;
    case BoundFamily::HStarlike:
      out.lower = 4.0 * root_lower;
      out.upper = 4.0 * ratio_upper;
      break;
    case BoundFamily::HConvex:
      out.lower = root_lower;
      out.upper = ratio_upper;
      break;
  }
  return out;
}

StatementForm statement_form_bounds(const StruveParams& params, BoundFamily family) {
  params.validate();
  const auto [r1, r2] = gamma_ratios(params);
  const double c = params.c;
  const double p = params.p;
  const auto real_sqrt = [](double v) -> std::optional<double> {
    if (!(v > 0.0) || !std::isfinite(v)) return std::nullopt;
    return std::sqrt(v);
  };
  StatementForm out;
  if (family == BoundFamily::FStarlike) {
    out.lower = real_sqrt(2.0 * (p + 1.0) / (c * (p + 3.0) * r1));
    const double den = (p + 3.0) * (p + 3.0) - 2.0 * (p + 5.0) * (p + 1.0) * r2 / (r1 * r1);
    if (const auto root = real_sqrt((p + 1.0) * (p + 3.0) / (r1 * c * den))) out.upper = 2.0 * *root;
  } else if (family == BoundFamily::GConvex) {
    if (const auto root = real_sqrt(1.0 / (c * r1))) out.lower = 2.0 / 3.0 * *root;
    const double den = 1.0 - 25.0 * r2 / (r1 * r1);
    if (const auto root = real_sqrt(1.0 / (r1 * c * den))) out.upper = 6.0 * *root;
  }
  return out;
}

}  // namespace gstruve
