#pragma once

#include <string>
#include <vector>

#include "gstruve/params.hpp"

namespace gstruve {

// q in {1,2,3}, p in {-0.5,0.5,2}, b in {1,2}, c in {0.5,1,2},
// delta in {0.5,1,2}: 162 points, q varying slowest.
[[nodiscard]] std::vector<StruveParams> default_grid();

// Parses a JSON array of {"q","p","b","c","delta"} objects. Missing keys
// take the StruveParams defaults; every point is validated. Throws
// DomainError on malformed input.
[[nodiscard]] std::vector<StruveParams> parse_grid(const std::string& json_text);
[[nodiscard]] std::vector<StruveParams> load_grid(const std::string& path);

}  // namespace gstruve
