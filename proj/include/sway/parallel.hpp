#ifndef SWAY_PARALLEL_HPP
#define SWAY_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sway {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Data-parallel loop over [0,n). Each iteration must write only its own
// slots so serial and parallel execution produce identical results.
template <class F>
void par_for(std::size_t n, int threads, F&& body) {
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)threads;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace sway

#endif
