#pragma once

// Data-parallel loops used by the grid and search code. Each kernel has a
// serial reference and an OpenMP version; both produce identical output
// because every slot is written independently and results are gathered in
// index order.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "setexp/vec2.hpp"

namespace setexp::kernels {

inline constexpr std::size_t kParallelThreshold = 256;

template <class F>
std::vector<double> directional_offsets_serial(std::span<const Vec2> dirs, F&& f) {
  std::vector<double> out(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) out[i] = f(dirs[i]);
  return out;
}

template <class F>
std::vector<double> directional_offsets_parallel(std::span<const Vec2> dirs, F&& f) {
  std::vector<double> out(dirs.size());
  const long n = static_cast<long>(dirs.size());
  std::exception_ptr err;
  long err_at = n;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f(dirs[i]);
    } catch (...) {
#pragma omp critical(setexp_kernel_error)
      {
        // keep the failure a serial run would have raised first
        if (i < err_at) {
          err_at = i;
          err = std::current_exception();
        }
      }
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

template <class F>
std::vector<double> directional_offsets(std::span<const Vec2> dirs, F&& f) {
  if (dirs.size() < kParallelThreshold) return directional_offsets_serial(dirs, f);
  return directional_offsets_parallel(dirs, f);
}

// out = f(0) ++ f(1) ++ ... ++ f(count - 1), each f(i) a vector<T>.
template <class T, class F>
std::vector<T> gather_serial(std::size_t count, F&& f) {
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto part = f(i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

template <class T, class F>
std::vector<T> gather_parallel(std::size_t count, F&& f) {
  std::vector<std::vector<T>> parts(count);
  const long n = static_cast<long>(count);
  std::exception_ptr err;
  long err_at = n;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      parts[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(setexp_kernel_error)
      {
        if (i < err_at) {
          err_at = i;
          err = std::current_exception();
        }
      }
    }
  }
  if (err) std::rethrow_exception(err);
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

template <class T, class F>
std::vector<T> gather(std::size_t count, F&& f) {
  if (count < 2) return gather_serial<T>(count, f);
  return gather_parallel<T>(count, f);
}

}  // namespace setexp::kernels
