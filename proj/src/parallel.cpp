#include "gstruve/parallel.hpp"

#include <exception>

#include "gstruve/struve.hpp"

namespace gstruve {

namespace {

// Runs body(i) for every index under OpenMP and rethrows the first exception
// (by index) on the calling thread.
template <class Body>
void parallel_indices(std::size_t count, Body body) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<double> eval_w_batch(const StruveParams& params, std::span<const double> xs, int deriv) {
  params.validate();
  std::vector<double> out(xs.size());
  parallel_indices(xs.size(), [&](std::size_t i) { out[i] = eval_w(params, xs[i], deriv); });
  return out;
}

std::vector<double> eval_w_batch_serial(const StruveParams& params, std::span<const double> xs, int deriv) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(eval_w(params, x, deriv));
  return out;
}

std::vector<double> family_value_batch(const StruveParams& params, Family family, std::span<const double> vs) {
  params.validate();
  std::vector<double> out(vs.size());
  parallel_indices(vs.size(), [&](std::size_t i) { out[i] = family_value(params, family, vs[i]); });
  return out;
}

std::vector<double> family_value_batch_serial(const StruveParams& params, Family family,
                                              std::span<const double> vs) {
  std::vector<double> out;
  out.reserve(vs.size());
  for (double v : vs) out.push_back(family_value(params, family, v));
  return out;
}

}  // namespace gstruve
