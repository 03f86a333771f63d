// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monocheck {

int max_workers() {
    if (const char* env = std::getenv("MONOCHECK_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) {
                return n;
            }
        } catch (...) {
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void configure_workers() {
#ifdef _OPENMP
    if (std::getenv("MONOCHECK_THREADS") != nullptr) {
        omp_set_num_threads(max_workers());
    }
#endif
}

bool use_parallel(ExecMode mode) {
    switch (mode) {
        case ExecMode::Serial:
            return false;
        case ExecMode::Parallel:
            return true;
        case ExecMode::Auto:
            break;
    }
#ifdef _OPENMP
    return max_workers() > 1;
#else
    return false;
#endif
}

}  // namespace monocheck
