// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace monocheck {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Runs the full acceptance matrix, printing one pass/fail line per criterion.
// Deterministic given the seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& out);

bool acceptance_passed(const std::vector<CriterionResult>& results);

}  // namespace monocheck
