#pragma once

#include <omp.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace lvo::par {

enum class Exec { serial, openmp };

inline Exec& default_exec() {
  static Exec e = Exec::openmp;
  return e;
}

inline int& max_threads() {
  static int n = 0;  // 0 = OpenMP default
  return n;
}

// Data-parallel index loop. The serial lane is the reference implementation;
// the OpenMP lane must produce identical results for any f that writes only
// to index-owned state.
template <class F>
void for_range(std::size_t n, F&& f, Exec ex = default_exec()) {
  if (ex == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  int nt = max_threads();
#pragma omp parallel for schedule(guided) num_threads(nt > 0 ? nt : omp_get_max_threads())
  for (long long i = 0; i < (long long)n; ++i) f((std::size_t)i);
}

// Evaluates pred on every index and returns the smallest failing index, if
// any. Results are deterministic in both lanes: the parallel lane reduces to
// a pass/fail verdict and rescans serially only when something failed.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t n, Pred&& pred, Exec ex = default_exec()) {
  if (ex == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) return i;
    return std::nullopt;
  }
  int all_ok = 1;
  int nt = max_threads();
#pragma omp parallel for schedule(guided) reduction(&& : all_ok) \
    num_threads(nt > 0 ? nt : omp_get_max_threads())
  for (long long i = 0; i < (long long)n; ++i) all_ok = all_ok && pred((std::size_t)i);
  if (all_ok) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) return i;
  return std::nullopt;
}

}  // namespace lvo::par
