#include "gstruve/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <json.hpp>
#include <ostream>
#include <utility>

#include "gstruve/bounds.hpp"
#include "gstruve/error.hpp"
#include "gstruve/grid.hpp"
#include "gstruve/parallel.hpp"
#include "gstruve/radii.hpp"
#include "gstruve/struve.hpp"
#include "gstruve/verify.hpp"
#include "gstruve/zeros.hpp"

namespace gstruve::cli {

namespace {

using nlohmann::ordered_json;

// Raised for malformed or out-of-domain input detected before any numerics.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json numbers(const std::vector<double>& vs) {
  ordered_json arr = ordered_json::array();
  for (double v : vs) arr.push_back(number(v));
  return arr;
}

ordered_json params_json(const StruveParams& p) {
  return {{"q", p.q}, {"p", number(p.p)}, {"b", number(p.b)}, {"c", number(p.c)}, {"delta", number(p.delta)}};
}

// Leaf rows (dotted path, scalar text). Scalars are rendered by the JSON
// serializer so every format shows the same digits.
void flatten(const ordered_json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) rows.emplace_back(path, j.dump());
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      const std::string key = j.is_object() ? it.key() : std::to_string(i);
      flatten(*it, path.empty() ? key : path + "." + key, rows);
    }
    return;
  }
  rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void write_verify_text(const ordered_json& record, std::ostream& out) {
  const auto& results = record["results"];
  out << "suite " << results["suite"].get<std::string>() << " on " << results["grid_size"].dump()
      << " grid points: " << (results["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : results["checks"]) {
    std::string status = c["status"].get<std::string>();
    for (char& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << status << " " << c["name"].get<std::string>() << " worst " << c["worst"].dump() << " (need "
        << c["relation"].get<std::string>() << " " << c["limit"].dump() << ", " << c["samples"].dump()
        << " samples, " << c["failures"].dump() << " failing)";
    if (!c["detail"].get<std::string>().empty()) out << " first: " << c["detail"].get<std::string>();
    out << "\n";
  }
}

void write_record(const ordered_json& record, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << record.dump(2) << "\n";
    return;
  }
  if (format == Format::Text && record["command"]["name"] == "verify") {
    write_verify_text(record, out);
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(record, "", rows);
  if (format == Format::Csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    for (const auto& [k, v] : rows) out << k << " = " << v << "\n";
  }
}

template <class T, class Parse>
T parse_or_usage(const std::string& text, Parse parse) {
  try {
    return parse(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

struct ParamFlags {
  int q = 1;
  double p = 0.0, b = 2.0, c = 1.0, delta = 1.0;

  void attach(CLI::App* app) {
    app->add_option("--q", q, "positive integer q")->capture_default_str();
    app->add_option("--p", p, "order p, p + 1 > 0")->capture_default_str();
    app->add_option("--b", b, "b > 0")->capture_default_str();
    app->add_option("--c", c, "c > 0")->capture_default_str();
    app->add_option("--delta", delta, "delta > 0")->capture_default_str();
  }

  StruveParams make() const {
    try {
      return StruveParams::make(q, p, b, c, delta);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
};

ordered_json run_eval(const StruveParams& params, const std::vector<double>& zs, int deriv, const std::string& norm,
                      ordered_json& diagnostics) {
  if (zs.empty()) throw UsageError("eval needs at least one --z");
  if (deriv < 0 || deriv > 2) throw UsageError("--deriv must be 0, 1 or 2");
  std::vector<double> values;
  if (norm == "w") {
    values = eval_w_batch(params, zs, deriv);
  } else {
    const Normalization n = parse_or_usage<Normalization>(norm, parse_normalization);
    for (double z : zs) values.push_back(eval_normalized(params, n, z, deriv));
  }
  diagnostics["points"] = zs.size();
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < zs.size(); ++i) points.push_back({{"z", number(zs[i])}, {"value", number(values[i])}});
  return {{"norm", norm}, {"deriv", deriv}, {"points", points}};
}

ordered_json run_zeros(const StruveParams& params, const std::string& family_name, int count,
                       ordered_json& diagnostics) {
  const Family family = parse_or_usage<Family>(family_name, parse_family);
  if (count < 1 || count > kMaxZeroCount) throw UsageError("--count must be in [1, 64]");
  const ZeroSequence seq = find_zeros(params, family, count);
  ordered_json brackets = ordered_json::array();
  for (const auto& [lo, hi] : seq.brackets) brackets.push_back({number(lo), number(hi)});
  diagnostics["residuals"] = numbers(seq.residuals);
  diagnostics["brackets"] = brackets;
  diagnostics["scan_passes"] = seq.scan_passes;
  return {{"family", std::string(to_string(family))}, {"count", count}, {"zeros", numbers(seq.zeros)}};
}

ordered_json run_radius(const StruveParams& params, const std::string& kind_name, const std::string& norm_name,
                        double alpha, ordered_json& diagnostics) {
  const RadiusKind kind = parse_or_usage<RadiusKind>(kind_name, parse_radius_kind);
  const Normalization norm = parse_or_usage<Normalization>(norm_name, parse_normalization);
  if (!(alpha >= 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie in [0, 1)");
  const RadiusResult r = solve_radius({params, kind, norm, alpha});
  diagnostics["bracket"] = {number(r.lo), number(r.hi)};
  diagnostics["residual"] = number(r.residual);
  diagnostics["iterations"] = r.iterations;
  diagnostics["upper_limit"] = number(r.upper_limit);
  return {{"kind", std::string(to_string(kind))},
          {"norm", std::string(to_string(norm))},
          {"alpha", number(alpha)},
          {"value", number(r.value)}};
}

ordered_json run_bounds(const StruveParams& params, const std::string& family_name, int k, ordered_json& diagnostics) {
  const BoundFamily family = parse_or_usage<BoundFamily>(family_name, parse_bound_family);
  if (k < 1 || k + 1 > kMaxNewtonOrder) throw UsageError("--k must be in [1, 11]");
  const BoundsPair b = bounds_for(params, family, k);
  diagnostics["auxiliary_family"] = std::string(to_string(b.family));
  diagnostics["radius_kind"] = b.radius_kind == RadiusTag::Starlike0 ? "starlike0" : "convex0";
  diagnostics["sums"] = numbers(b.sums);
  if (k == 1 && (family == BoundFamily::FStarlike || family == BoundFamily::GConvex)) {
    const StatementForm form = statement_form_bounds(params, family);
    diagnostics["statement_form"] = {{"lower", form.lower ? number(*form.lower) : ordered_json(nullptr)},
                                     {"upper", form.upper ? number(*form.upper) : ordered_json(nullptr)}};
  }
  return {{"family", std::string(to_string(family))}, {"k", k}, {"lower", number(b.lower)}, {"upper", number(b.upper)}};
}

ordered_json run_verify(const std::string& suite_name, const std::string& grid_spec, bool& passed,
                        ordered_json& diagnostics) {
  const Suite suite = parse_or_usage<Suite>(suite_name, parse_suite);
  std::vector<StruveParams> grid;
  if (grid_spec == "default") {
    grid = default_grid();
  } else {
    grid = parse_or_usage<std::vector<StruveParams>>(grid_spec, load_grid);
  }
  if (grid.empty()) throw UsageError("verification grid is empty");
  const VerifyReport report = verify_suite(suite, grid);
  passed = report.passed();
  ordered_json checks = ordered_json::array();
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    failed += c.status == CheckStatus::Fail;
    checks.push_back({{"name", c.name},
                      {"status", std::string(to_string(c.status))},
                      {"worst", number(c.worst)},
                      {"relation", c.relation},
                      {"limit", number(c.limit)},
                      {"samples", c.samples},
                      {"failures", c.failures},
                      {"detail", c.detail}});
  }
  diagnostics["failed_checks"] = failed;
  diagnostics["grid"] = grid_spec;
  return {{"suite", std::string(to_string(suite))},
          {"grid_size", report.grid_size},
          {"passed", passed},
          {"checks", checks}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Struve functions: evaluation, zeros, radii of starlikeness and convexity, bounds"};
  app.name("gstruve");
  app.require_subcommand(1, 1);

  std::string format_name = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };

  ParamFlags flags;

  CLI::App* eval = app.add_subcommand("eval", "evaluate W or a normalization (or a derivative)");
  std::vector<double> zs;
  int deriv = 0;
  std::string eval_norm = "w";
  eval->add_option("--z", zs, "abscissa z > 0 (repeatable)")->take_all();
  eval->add_option("--deriv", deriv, "derivative order 0, 1 or 2")->capture_default_str();
  eval->add_option("--norm", eval_norm, "w, f, g or h")->capture_default_str();

  CLI::App* zeros = app.add_subcommand("zeros", "first positive zeros of a family");
  std::string zero_family = "w";
  int count = 5;
  zeros->add_option("--family", zero_family, "w, w-prime, g-prime, h-prime, alex-g or alex-h")->capture_default_str();
  zeros->add_option("--count", count, "number of zeros (1..64)")->capture_default_str();

  CLI::App* radius = app.add_subcommand("radius", "radius of starlikeness or convexity of order alpha");
  std::string kind = "starlike";
  std::string radius_norm = "f";
  double alpha = 0.0;
  radius->add_option("--kind", kind, "starlike or convex")->capture_default_str();
  radius->add_option("--norm", radius_norm, "f, g or h")->capture_default_str();
  radius->add_option("--alpha", alpha, "order in [0, 1)")->capture_default_str();

  CLI::App* bounds = app.add_subcommand("bounds", "Euler-Rayleigh bounds on a radius at alpha = 0");
  std::string bound_family = "f-starlike";
  int k = 1;
  bounds->add_option("--family", bound_family, "f-starlike, g-starlike, h-starlike, g-convex or h-convex")
      ->capture_default_str();
  bounds->add_option("--k", k, "Euler-Rayleigh index (1..11)")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite over a parameter grid");
  std::string suite = "all";
  std::string grid = "default";
  verify->add_option("--suite", suite, "interlacing, sandwich, bessel, monotone, scaling or all")
      ->capture_default_str();
  verify->add_option("--grid", grid, "'default' or a JSON file of {q,p,b,c,delta} objects")->capture_default_str();

  for (CLI::App* sub : {eval, zeros, radius, bounds}) flags.attach(sub);
  for (CLI::App* sub : {eval, zeros, radius, bounds, verify}) add_format(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  ordered_json record;
  record["schema_version"] = "1";
  record["command"] = {{"name", command}, {"args", args}};
  ordered_json diagnostics = ordered_json::object();
  bool passed = true;
  const std::string inputs = command == "verify" ? "--suite " + suite + " --grid " + grid
                                                 : StruveParams{flags.q, flags.p, flags.b, flags.c, flags.delta}.to_string();
  try {
    const StruveParams params = command == "verify" ? StruveParams{} : flags.make();
    record["params"] = command == "verify" ? ordered_json(nullptr) : params_json(params);
    ordered_json results;
    if (command == "eval")
      results = run_eval(params, zs, deriv, eval_norm, diagnostics);
    else if (command == "zeros")
      results = run_zeros(params, zero_family, count, diagnostics);
    else if (command == "radius")
      results = run_radius(params, kind, radius_norm, alpha, diagnostics);
    else if (command == "bounds")
      results = run_bounds(params, bound_family, k, diagnostics);
    else
      results = run_verify(suite, grid, passed, diagnostics);
    record["results"] = std::move(results);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << chosen->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical error in " << command << " " << inputs << ": " << e.what() << "\n";
    return kExitNumerical;
  }
  record["diagnostics"] = std::move(diagnostics);
  write_record(record, format, out);
  return passed ? kExitOk : kExitNumerical;
}

}  // namespace gstruve::cli
