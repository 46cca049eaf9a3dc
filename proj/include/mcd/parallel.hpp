#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstddef>
#include <exception>

namespace mcd {

inline int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_jobs(int k) {
#ifdef _OPENMP
    if (k > 0) omp_set_num_threads(k);
#else
    (void)k;
#endif
}

// Index-parallel loop. Callers write into preallocated slots keyed by index,
// so results are identical for any worker count; the first exception is
// rethrown after the loop.
template <class F>
void parallel_for_index(std::size_t count, F&& fn) {
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            fn(std::size_t(i));
        } catch (...) {
#pragma omp critical
            {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
}

} // namespace mcd
