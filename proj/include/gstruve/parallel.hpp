#pragma once

#include <exception>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gstruve/params.hpp"
#include "gstruve/zeros.hpp"

namespace gstruve {

// Batch evaluation of W (or a derivative) and of a zero family. The OpenMP
// versions split the abscissae across threads; the *_serial versions are the
// reference loops they are tested against. Both return results in input order.
[[nodiscard]] std::vector<double> eval_w_batch(const StruveParams& params, std::span<const double> xs, int deriv = 0);
[[nodiscard]] std::vector<double> eval_w_batch_serial(const StruveParams& params, std::span<const double> xs,
                                                      int deriv = 0);
[[nodiscard]] std::vector<double> family_value_batch(const StruveParams& params, Family family,
                                                     std::span<const double> vs);
[[nodiscard]] std::vector<double> family_value_batch_serial(const StruveParams& params, Family family,
                                                            std::span<const double> vs);

// Either a value or the message of the exception that prevented it.
template <class R>
struct Outcome {
  std::optional<R> value;
  std::string error;

  [[nodiscard]] bool ok() const noexcept { return value.has_value(); }
};

namespace detail {
template <class R, class F>
Outcome<R> capture(F& fn, const StruveParams& params) {
  Outcome<R> out;
  try {
    out.value = fn(params);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}
}  // namespace detail

// fn applied to every grid point; out[i] belongs to grid[i] whatever the
// thread schedule. fn must be safe to call concurrently.
template <class R, class F>
std::vector<Outcome<R>> map_grid(const std::vector<StruveParams>& grid, F fn) {
  std::vector<Outcome<R>> out(grid.size());
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = detail::capture<R>(fn, grid[i]);
  return out;
}

template <class R, class F>
std::vector<Outcome<R>> map_grid_serial(const std::vector<StruveParams>& grid, F fn) {
  std::vector<Outcome<R>> out;
  out.reserve(grid.size());
  for (const StruveParams& params : grid) out.push_back(detail::capture<R>(fn, params));
  return out;
}

}  // namespace gstruve
