#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace tetrabox::detail {

// Runs body(i) for i in [0, count) across OpenMP threads. Results must be
// written to per-index slots so the outcome does not depend on scheduling;
// the first exception by index is rethrown after the loop.
template <typename Body>
void parallel_for_index(std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace tetrabox::detail
