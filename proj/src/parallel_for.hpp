#pragma once

#include <exception>

namespace bernstein::detail {

// Runs body(i) for i in [0, n) across OpenMP threads. The first exception
// thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(int n, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(bernstein_parallel_for)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace bernstein::detail
