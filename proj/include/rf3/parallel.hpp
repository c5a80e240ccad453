#pragma once

#include "rf3/field.hpp"

namespace rf3 {

/// Execution mode for the scan kernels.  Every parallel kernel has a serial
/// twin with identical output; tests compare the two.
enum class Exec { serial, parallel };

template <class Fn>
void for_each_index(Exec mode, i64 n, Fn&& fn) {
    if (mode == Exec::parallel) {
#ifdef RF3_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (i64 i = 0; i < n; ++i) fn(i);
        return;
    }
    for (i64 i = 0; i < n; ++i) fn(i);
}

}  // namespace rf3
