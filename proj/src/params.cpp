#include "gstruve/params.hpp"

#include <cmath>
#include <sstream>

#include "gstruve/error.hpp"

namespace gstruve {

StruveParams StruveParams::make(int q, double p, double b, double c, double delta) {
  StruveParams params{q, p, b, c, delta};
  params.validate();
  return params;
}

void StruveParams::validate() const {
  const bool finite = std::isfinite(p) && std::isfinite(b) && std::isfinite(c) && std::isfinite(delta);
  if (!finite || q < 1 || !(b > 0.0) || !(c > 0.0) || !(delta > 0.0) || !(p + 1.0 > 0.0))
    throw DomainError("invalid parameters " + to_string() +
                      ": need integer q >= 1, b, c, delta > 0 and p + 1 > 0");
  if (!(shift() > 0.0)) throw DomainError("invalid parameters " + to_string() + ": P <= 0");
}

std::string StruveParams::to_string() const {
  std::ostringstream os;
  os << "(q=" << q << ", p=" << p << ", b=" << b << ", c=" << c << ", delta=" << delta << ")";
  return os.str();
}

std::string_view to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::F: return "f";
    case Normalization::G: return "g";
    case Normalization::H: return "h";
  }
  return "?";
}

Normalization parse_normalization(std::string_view s) {
  if (s == "f" || s == "F") return Normalization::F;
  if (s == "g" || s == "G") return Normalization::G;
  if (s == "h" || s == "H") return Normalization::H;
  throw DomainError("unknown normalization '" + std::string(s) + "' (expected f, g or h)");
}

}  // namespace gstruve
