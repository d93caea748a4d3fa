#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffarc {

inline int hardware_jobs() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs body(i) for i in [0, count). With jobs > 1 the iterations are spread
// over an OpenMP team; the body must only touch its own slot of any shared
// output so results are independent of scheduling.
template <class F>
void for_each_index(long long count, int jobs, F&& body) {
#ifdef _OPENMP
    if (jobs > 1 && count > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (long long i = 0; i < count; ++i) body(i);
        return;
    }
#endif
    for (long long i = 0; i < count; ++i) body(i);
}

}  // namespace ffarc
