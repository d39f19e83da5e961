#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lamelab {

// Runs fn(i) for i in [0, count). jobs <= 1 selects the plain serial loop,
// which is the reference path; jobs > 1 dispatches to OpenMP when compiled in.
// Tasks must be independent and write only to their own output slot, so both
// paths produce identical results.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

inline int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace lamelab
