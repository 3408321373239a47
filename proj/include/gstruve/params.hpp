#pragma once

#include <string>
#include <string_view>

namespace gstruve {

// Parameters (q, p, b, c, delta) of the generalized Struve function
//
//   W(z) = sum_n (-1)^n c^n / (n! Gamma(q n + P)) (z/2)^(2n+p+1),
//   P    = p/delta + (b+2)/2.
//
// Valid sets satisfy q >= 1, b, c, delta > 0 and p + 1 > 0; then P > 0 and
// every zero of W is real.
struct StruveParams {
  int q = 1;
  double p = 0.0;
  double b = 2.0;
  double c = 1.0;
  double delta = 1.0;

  // Throws DomainError when the constraints above do not hold.
  static StruveParams make(int q, double p, double b, double c, double delta);

  void validate() const;

  // The recurring gamma shift P = p/delta + (b+2)/2.
  [[nodiscard]] double shift() const noexcept { return p / delta + (b + 2.0) / 2.0; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const StruveParams&, const StruveParams&) = default;
};

// The three members of the normalized class built from W:
//   F: (2^(p+1) Gamma(P) W(z))^(1/(p+1))
//   G: 2^(p+1) Gamma(P) z^(-p) W(z)
//   H: 2^(p+1) Gamma(P) z^(1-(p+1)/2) W(sqrt z)
enum class Normalization { F, G, H };

[[nodiscard]] std::string_view to_string(Normalization n) noexcept;
// Accepts "f", "g", "h" (either case). Throws DomainError otherwise.
[[nodiscard]] Normalization parse_normalization(std::string_view s);

}  // namespace gstruve
