#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace cacti {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly, A possibly non-square (overdetermined systems are
/// checked against every equation). Rows are cleared of denominators and
/// eliminated fraction-free (Bareiss). Returns nullopt when inconsistent; an
/// underdetermined consistent system gets free variables set to 0.
std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                 const std::vector<Rational>& b);

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> invert_exact(const RationalMatrix& a);

/// All leading principal minors strictly positive (Sylvester's criterion).
bool leading_minors_positive(const RationalMatrix& a);

namespace detail {

struct IntRow {
    std::vector<BigInt> a;
    BigInt b;
};

/// Clears denominators row by row; the scaling is positive so pivot signs are
/// those of the original minors up to positive factors.
inline std::vector<IntRow> clear_denominators(const RationalMatrix& a,
                                              const std::vector<Rational>& b) {
    std::vector<IntRow> rows;
    for (size_t i = 0; i < a.size(); ++i) {
        BigInt l = 1;
        for (const auto& x : a[i]) l = lcm(l, denominator(x));
        l = lcm(l, denominator(b[i]));
        IntRow row;
        for (const auto& x : a[i]) row.a.push_back(BigInt(numerator(x) * (l / denominator(x))));
        row.b = numerator(b[i]) * (l / denominator(b[i]));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

inline std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                        const std::vector<Rational>& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    auto m = detail::clear_denominators(a, b);

    // Bareiss fraction-free elimination with column pivot tracking
    std::vector<size_t> pivot_col;
    BigInt prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p].a[c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i].a[j] = (m[r].a[c] * m[i].a[j] - m[i].a[c] * m[r].a[j]) / prev;
            m[i].b = (m[r].a[c] * m[i].b - m[i].a[c] * m[r].b) / prev;
            m[i].a[c] = 0;
        }
        prev = m[r].a[c];
        pivot_col.push_back(c);
        ++r;
    }
    // consistency: rows below rank must be all-zero
    for (size_t i = r; i < rows; ++i) {
        for (const auto& x : m[i].a)
            if (x != 0) return std::nullopt;  // cannot happen: eliminated
        if (m[i].b != 0) return std::nullopt;
    }
    // back substitution in rationals, free variables = 0
    std::vector<Rational> x(cols, 0);
    for (size_t i = r; i-- > 0;) {
        size_t c = pivot_col[i];
        Rational acc = Rational(m[i].b);
        for (size_t j = c + 1; j < cols; ++j)
            if (x[j] != 0) acc -= Rational(m[i].a[j]) * x[j];
        x[c] = acc / Rational(m[i].a[c]);
    }
    // overdetermined check against the original system
    for (size_t i = 0; i < rows; ++i) {
        Rational acc = 0;
        for (size_t j = 0; j < cols; ++j) acc += a[i][j] * x[j];
        if (acc != b[i]) return std::nullopt;
    }
    return x;
}

inline std::optional<RationalMatrix> invert_exact(const RationalMatrix& a) {
    size_t n = a.size();
    RationalMatrix work = a;
    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && work[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(work[p], work[c]);
        std::swap(inv[p], inv[c]);
        Rational d = work[c][c];
        for (size_t j = 0; j < n; ++j) {
            work[c][j] /= d;
            inv[c][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || work[i][c] == 0) continue;
            Rational f = work[i][c];
            for (size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

inline bool leading_minors_positive(const RationalMatrix& a) {
    size_t n = a.size();
    std::vector<Rational> zeros(n, 0);
    auto m = detail::clear_denominators(a, zeros);
    // without row swaps the Bareiss pivots are the leading principal minors,
    // up to positive row-scaling factors
    BigInt prev = 1;
    for (size_t c = 0; c < n; ++c) {
        if (m[c].a[c] <= 0) return false;
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j)
                m[i].a[j] = (m[c].a[c] * m[i].a[j] - m[i].a[c] * m[c].a[j]) / prev;
            m[i].a[c] = 0;
        }
        prev = m[c].a[c];
    }
    return true;
}

}  // namespace cacti
