// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace monocheck {

// All arithmetic in this project is exact. Rationals are kept in lowest
// terms with positive denominator (GMP canonical form); floating point
// never appears in any computation or report.
using Rational = mpq_class;
using Integer = mpz_class;
using Point = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
// Anything else (floats, exponents, whitespace, q == 0) is rejected.
std::optional<Rational> parse_rational(const std::string& text);

std::string rational_to_string(const Rational& q);
std::string point_to_string(const Point& p);

// Lexicographic comparison; total order used for canonical sorting.
int compare_points(const Point& a, const Point& b);

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return compare_points(a, b) < 0; }
};

}  // namespace monocheck
