#include "gstruve/grid.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gstruve/error.hpp"

namespace gstruve {

std::vector<StruveParams> default_grid() {
  std::vector<StruveParams> grid;
  for (int q : {1, 2, 3})
    for (double p : {-0.5, 0.5, 2.0})
      for (double b : {1.0, 2.0})
        for (double c : {0.5, 1.0, 2.0})
          for (double delta : {0.5, 1.0, 2.0}) grid.push_back(StruveParams::make(q, p, b, c, delta));
  return grid;
}

std::vector<StruveParams> parse_grid(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("grid is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DomainError("grid must be a JSON array of parameter objects");
  std::vector<StruveParams> grid;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_object()) throw DomainError("grid entry " + std::to_string(i) + " is not an object");
    StruveParams params;
    const auto number = [&](const char* key, double fallback) {
      if (!item.contains(key)) return fallback;
      if (!item[key].is_number()) throw DomainError("grid entry " + std::to_string(i) + ": '" + key + "' is not a number");
      return item[key].get<double>();
    };
    const double q = number("q", params.q);
    if (q != std::floor(q) || q < 1 || q > 1000)
      throw DomainError("grid entry " + std::to_string(i) + ": q must be a positive integer");
    params = StruveParams::make(static_cast<int>(q), number("p", params.p), number("b", params.b),
                                number("c", params.c), number("delta", params.delta));
    grid.push_back(params);
  }
  return grid;
}

std::vector<StruveParams> load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read grid file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_grid(text.str());
}

}  // namespace gstruve
