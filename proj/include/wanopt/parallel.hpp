#ifndef WANOPT_PARALLEL_HPP
#define WANOPT_PARALLEL_HPP

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wanopt {

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-parallel map over [begin, end). threads <= 1 runs the plain serial
// loop, which is the reference path the consistency tests compare against.
// Exceptions thrown by workers are captured and rethrown on the caller.
template <typename F>
void parallel_for(int begin, int end, int threads, F&& body) {
  if (threads <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  std::exception_ptr err;
  std::mutex err_mutex;
#pragma omp parallel for num_threads(threads) schedule(static)
  for (int i = begin; i < end; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  for (int i = begin; i < end; ++i) body(i);
#endif
}

}  // namespace wanopt

#endif
