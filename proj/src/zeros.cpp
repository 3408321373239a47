#include "gstruve/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entire.hpp"
#include "gstruve/error.hpp"

namespace gstruve {

namespace {

// How a family's natural variable v maps onto the series variable t, and
// which weight selects its series.
struct FamilyDesc {
  Weight weight;
  bool squared = false;  // t = v^2 / 4, zeros are square roots in the power-sum variable
  Accum t_per_v = 1;     // t = t_per_v * v otherwise
};

FamilyDesc describe(const StruveParams& params, Family family) {
  switch (family) {
    case Family::W: return {detail::unit_weight(), true, 1};
    case Family::WPrime: return {detail::w_prime_weight(params), true, 1};
    case Family::GPrimeSubst: return {detail::g_prime_weight(), false, 1};
    case Family::HPrimeSubst: return {detail::h_prime_weight(), false, 1};
    case Family::AlexGSubst: return {detail::alexander_g_weight(), false, 1};
    case Family::AlexH: return {detail::alexander_h_weight(), false, Accum(1) / 4};
  }
  throw DomainError("unknown family");
}

SeriesSum evaluate(const StruveParams& params, const FamilyDesc& desc, double v) {
  return sum_entire_adaptive(params, desc.weight, v, {desc.squared, desc.t_per_v});
}

// Zeros of the family interlace those of a reference family, possibly after
// a change of variable: lower_n < upper_n < lower_{n+1}.
struct Reference {
  Family family;
  bool self_is_lower;
  enum class Map { Identity, QuarterSquare, Times4 } map;
};

Reference reference_for(Family family) {
  switch (family) {
    case Family::W: return {Family::WPrime, false, Reference::Map::Identity};
    case Family::WPrime: return {Family::W, true, Reference::Map::Identity};
    case Family::GPrimeSubst: return {Family::W, true, Reference::Map::QuarterSquare};
    case Family::HPrimeSubst: return {Family::W, true, Reference::Map::QuarterSquare};
    case Family::AlexGSubst: return {Family::GPrimeSubst, true, Reference::Map::Identity};
    case Family::AlexH: return {Family::HPrimeSubst, true, Reference::Map::Times4};
  }
  throw DomainError("unknown family");
}

double apply_map(Reference::Map map, double v) {
  switch (map) {
    case Reference::Map::Identity: return v;
    case Reference::Map::QuarterSquare: return v * v / 4.0;
    case Reference::Map::Times4: return 4.0 * v;
  }
  return v;
}

// Lower bound on the first zero in the natural variable from S_1 = sum 1/u_n.
double first_zero_lower_bound(const StruveParams& params, const FamilyDesc& desc) {
  Accum prod = 1;
  for (int j = 0; j < params.q; ++j) prod *= Accum(params.shift()) + j;
  const Accum e1 = -Accum(params.c) / prod;
  const Accum per_u = desc.squared ? Accum(1) / 4 : desc.t_per_v;
  const Accum s1 = -e1 * desc.weight.at(1) / desc.weight.at(0) * per_u;
  const Accum u1 = 1 / s1;
  return double(desc.squared ? std::sqrt(u1) : u1);
}

// Sign scans run in the Bessel-like abscissa x with t = x^2 / 4, where zeros
// of every family are roughly evenly spaced; brackets are then mapped to v.
class Scanner {
public:
  Scanner(const StruveParams& params, Family family)
      : params_(params), family_(family), desc_(describe(params, family)) {}

  SeriesSum eval(double v) const { return evaluate(params_, desc_, v); }

  double to_natural(double x) const {
    return desc_.squared ? x : double(detail::quarter_square(x) / desc_.t_per_v);
  }

  double to_abscissa(double v) const { return desc_.squared ? v : double(2 * std::sqrt(desc_.t_per_v * Accum(v))); }

  ZeroSequence scan(int count, double step0, double cap_fraction) const {
    ZeroSequence seq;
    seq.family = family_;
    seq.params = params_;

    double step = step0;
    double x_prev = 0.0;
    double last_zero_x = 0.0;
    SeriesSum s_prev;
    s_prev.value = 1;
    s_prev.abs_sum = 1;

    while (static_cast<int>(seq.zeros.size()) < count) {
      const double x = x_prev + step;
      const double v = to_natural(x);
      if (v > kScanLimit)
        throw ScanOverflowError("zero scan for " + std::string(to_string(family_)) + " " + params_.to_string() +
                                " passed abscissa 1e6 after " + std::to_string(seq.zeros.size()) + " zeros");
      const SeriesSum s = eval(v);
      if ((s.value > 0) != (s_prev.value > 0)) {
        refine(seq, to_natural(x_prev), s_prev, v, s);
        const double zero_x = to_abscissa(seq.zeros.back());
        if (seq.zeros.size() > 4) step = std::min(2.0 * step, (zero_x - last_zero_x) * cap_fraction);
        last_zero_x = zero_x;
      }
      x_prev = x;
      s_prev = s;
    }
    return seq;
  }

private:
  void refine(ZeroSequence& seq, double lo, SeriesSum s_lo, double hi, SeriesSum s_hi) const {
    const Accum secant = std::fabs(s_hi.value - s_lo.value) / Accum(hi - lo);
    const bool lo_positive = s_lo.value > 0;
    const double bracket_lo = lo;
    const double bracket_hi = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (!(mid > lo && mid < hi)) break;
      const SeriesSum s = eval(mid);
      if (s.value == 0) {
        lo = hi = mid;
        break;
      }
      if ((s.value > 0) == lo_positive)
        lo = mid;
      else
        hi = mid;
      if (hi - lo <= 1e-15 * (1.0 + mid)) break;
    }
    const double zero = 0.5 * (lo + hi);
    const SeriesSum at = eval(zero);
    const double uncertainty = secant > 0 ? double(at.noise / secant) : std::numeric_limits<double>::infinity();
    if (uncertainty > 1e-9 * (1.0 + zero))
      throw PrecisionLossError("zero " + std::to_string(seq.zeros.size() + 1) + " of " +
                               std::string(to_string(family_)) + " " + params_.to_string() + " near " +
                               std::to_string(zero) + " is undetermined beyond " + std::to_string(uncertainty / (1.0 + zero)) + " relative" +
                               " (series cancellation)");
    seq.zeros.push_back(zero);
    seq.residuals.push_back(double(std::fabs(at.value) / at.abs_sum));
    seq.brackets.emplace_back(bracket_lo, bracket_hi);
  }

  StruveParams params_;
  Family family_;
  FamilyDesc desc_;
};

constexpr int kMaxPasses = 6;

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::W: return "w";
    case Family::WPrime: return "w-prime";
    case Family::GPrimeSubst: return "g-prime";
    case Family::HPrimeSubst: return "h-prime";
    case Family::AlexGSubst: return "alex-g";
    case Family::AlexH: return "alex-h";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::W, Family::WPrime, Family::GPrimeSubst, Family::HPrimeSubst, Family::AlexGSubst,
                   Family::AlexH})
    if (s == to_string(f)) return f;
  throw DomainError("unknown zero family '" + std::string(s) +
                    "' (expected w, w-prime, g-prime, h-prime, alex-g or alex-h)");
}

double family_value(const StruveParams& params, Family family, double v) {
  params.validate();
  if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("family_value: abscissa must be nonnegative");
  const FamilyDesc desc = describe(params, family);
  return double(evaluate(params, desc, v).value / desc.weight.at(0));
}

ZeroSequence find_zeros(const StruveParams& params, Family family, int count) {
  params.validate();
  if (count < 1 || count > kMaxZeroCount)
    throw DomainError("zero count must be in [1, 64], got " + std::to_string(count));

  const Scanner self(params, family);
  const Reference ref = reference_for(family);
  const Scanner other(params, ref.family);
  const double step_self = std::min(0.1, self.to_abscissa(first_zero_lower_bound(params, describe(params, family))) / 4);
  const double step_other =
      std::min(0.1, other.to_abscissa(first_zero_lower_bound(params, describe(params, ref.family))) / 4);

  double scale = 1.0;
  for (int pass = 1; pass <= kMaxPasses; ++pass, scale *= 0.5) {
    ZeroSequence seq = self.scan(count, step_self * scale, 0.25 * scale);
    const ZeroSequence ref_seq = other.scan(count, step_other * scale, 0.25 * scale);
    std::vector<double> mapped(ref_seq.zeros.size());
    std::transform(ref_seq.zeros.begin(), ref_seq.zeros.end(), mapped.begin(),
                   [&](double v) { return apply_map(ref.map, v); });
    const InterlacingReport report =
        ref.self_is_lower ? check_interlacing(seq.zeros, mapped) : check_interlacing(mapped, seq.zeros);
    if (report.interlaced) {
      seq.scan_passes = pass;
      return seq;
    }
  }
  throw PrecisionLossError("zeros of " + std::string(to_string(family)) + " " + params.to_string() +
                           " fail to interlace with " + std::string(to_string(ref.family)) + " after " +
                           std::to_string(kMaxPasses) + " scan refinements");
}

InterlacingReport check_interlacing(const std::vector<double>& lower, const std::vector<double>& upper) {
  if (lower.size() != upper.size())
    throw LengthMismatchError("interlacing check needs equal lengths, got " + std::to_string(lower.size()) +
                              " and " + std::to_string(upper.size()));
  std::vector<double> chain;
  chain.reserve(2 * lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    chain.push_back(lower[i]);
    chain.push_back(upper[i]);
  }
  InterlacingReport report;
  report.interlaced = true;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const double gap = chain[i] - chain[i - 1];
    const double scale = std::max(std::fabs(chain[i]), std::fabs(chain[i - 1]));
    report.worst_margin = std::min(report.worst_margin, scale > 0 ? gap / scale : gap);
    if (!(gap > 0) && report.interlaced) {
      report.interlaced = false;
      report.first_violation = static_cast<int>(i);
    }
  }
  if (chain.size() < 2) report.worst_margin = 0.0;
  return report;
}

InterlacingReport check_interlacing(const ZeroSequence& lower, const ZeroSequence& upper) {
  return check_interlacing(lower.zeros, upper.zeros);
}

}  // namespace gstruve
