// Copyright (c) monocheck contributors.
// SPDX-License-Identifier: Apache-2.0
#include "monocheck/rational.hpp"

namespace monocheck {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = (text[0] == '-');
        i = 1;
    }
    std::string num;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        num.push_back(text[i]);
        ++i;
    }
    if (num.empty()) {
        return std::nullopt;
    }
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') {
            return std::nullopt;
        }
        ++i;
        den.clear();
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            den.push_back(text[i]);
            ++i;
        }
        if (den.empty() || i != text.size()) {
            return std::nullopt;
        }
    }
    Integer n(num, 10);
    Integer d(den, 10);
    if (d == 0) {
        return std::nullopt;
    }
    if (negative) {
        n = -n;
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string point_to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += rational_to_string(p[i]);
    }
    out += ")";
    return out;
}

int compare_points(const Point& a, const Point& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) {
            return c;
        }
    }
    if (a.size() < b.size()) {
        return -1;
    }
    if (a.size() > b.size()) {
        return 1;
    }
    return 0;
}

}  // namespace monocheck
