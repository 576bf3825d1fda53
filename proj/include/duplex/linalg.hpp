// Copyright 2026 The Duplex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "duplex/errors.hpp"
#include "duplex/rational.hpp"

namespace duplex {

/// Dense row/column of exact scalars. Treated as fixed-length once built;
/// element-wise operations require equal lengths.
using RationalVector = std::vector<Rational>;

enum class Ordering { Less, Equal, Greater };

/// Ordering by the first differing coordinate; Equal iff identical.
inline Ordering lex_compare(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) {
        throw ContractError("lex_compare: length mismatch (" + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()) + ")");
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < v[i]) return Ordering::Less;
        if (u[i] > v[i]) return Ordering::Greater;
    }
    return Ordering::Equal;
}

inline Rational dot(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) {
        throw ContractError("dot: length mismatch (" + std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()) + ")");
    }
    Rational acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

inline RationalVector scaled(const RationalVector& u, const Rational& a) {
    RationalVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * a;
    return out;
}

inline RationalVector negated(const RationalVector& u) {
    RationalVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = -u[i];
    return out;
}

/// u -= a * v, in place. Takes `a` by value: callers routinely pass an
/// element of u itself, which the loop overwrites.
inline void subtract_scaled(RationalVector& u, Rational a, const RationalVector& v) {
    if (u.size() != v.size()) throw ContractError("subtract_scaled: length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= a * v[i];
}

inline RationalVector zeros(std::size_t n) { return RationalVector(n); }

/// "(0, 1, 0)" in canonical fraction form.
inline std::string format_vector(const RationalVector& u) {
    std::string out = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i > 0) out += ", ";
        out += u[i].to_string();
    }
    out += ")";
    return out;
}

/// Solves the square system M x = rhs exactly by Gauss-Jordan elimination.
/// Returns nullopt when M is singular. Shares nothing with the pivoting
/// engine; this is the oracle's linear algebra.
inline std::optional<RationalVector> solve_linear_system(std::vector<RationalVector> m,
                                                         RationalVector rhs) {
    const std::size_t n = rhs.size();
    if (m.size() != n) throw ContractError("solve_linear_system: matrix/rhs size mismatch");
    for (const auto& row : m) {
        if (row.size() != n) throw ContractError("solve_linear_system: matrix not square");
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);

        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
        rhs[col] *= inv;

        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational factor = m[r][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] -= factor * m[col][j];
            rhs[r] -= factor * rhs[col];
        }
    }
    return rhs;
}

} // namespace duplex
