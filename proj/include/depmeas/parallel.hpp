#pragma once

#include <cstddef>

namespace depmeas {

// Execution mode for loops over independent work items (oracle trial sweeps,
// batch file analysis). Work items own their inputs — per-trial random
// streams, per-file parses — and write only to their own result slot, with any
// reduction done afterwards in index order, so both modes produce bit-identical
// output. The serial path is the reference the parallel path is tested
// against, and the compiled fallback when OpenMP is unavailable.
enum class ExecMode { kSerial, kParallel };

// Runs fn(0) .. fn(count - 1) under the given mode. In parallel mode fn must
// not throw and must not write outside its own index slot.
template <typename Fn>
void for_each_index(std::size_t count, ExecMode exec, Fn&& fn) {
  if (exec == ExecMode::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace depmeas
