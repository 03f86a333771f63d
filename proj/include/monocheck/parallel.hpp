// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace monocheck {

// Execution mode for the data-parallel kernels (cone sweeps, pairwise
// separation tests). Every kernel has a serial reference path; the
// parallel path must produce identical results, which the tests assert.
enum class ExecMode { Serial, Parallel, Auto };

// Worker count from MONOCHECK_THREADS, else the OpenMP default.
int max_workers();

// Applies MONOCHECK_THREADS to the OpenMP runtime. Called once at startup.
void configure_workers();

// Auto resolves to Parallel unless MONOCHECK_THREADS=1.
bool use_parallel(ExecMode mode);

// Scans indices 0..count-1 in ascending chunk order and returns the
// smallest index where ok_at() is false, or nullopt if all pass.
// Chunks are evaluated in parallel but failures are resolved per chunk,
// so the returned index does not depend on the schedule.
template <typename Fn>
std::optional<std::uint64_t> find_first_failure(std::uint64_t count, Fn&& ok_at, ExecMode mode) {
    if (count == 0) {
        return std::nullopt;
    }
    if (!use_parallel(mode)) {
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!ok_at(i)) {
                return i;
            }
        }
        return std::nullopt;
    }
    constexpr std::int64_t kNone = INT64_MAX;
    const std::uint64_t chunk = std::min<std::uint64_t>(4096, std::max<std::uint64_t>(64, count / 64));
    for (std::uint64_t begin = 0; begin < count; begin += chunk) {
        const std::uint64_t end = std::min(count, begin + chunk);
        const std::int64_t b = static_cast<std::int64_t>(begin);
        const std::int64_t e = static_cast<std::int64_t>(end);
        std::int64_t first_fail = kNone;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first_fail)
        for (std::int64_t i = b; i < e; ++i) {
            if (i < first_fail && !ok_at(static_cast<std::uint64_t>(i))) {
                first_fail = i;
            }
        }
        if (first_fail != kNone) {
            return static_cast<std::uint64_t>(first_fail);
        }
    }
    return std::nullopt;
}

}  // namespace monocheck
