#pragma once

#include <graphpoly/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace graphpoly {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix identity_matrix(size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline size_t row_count(const RationalMatrix& m) { return m.size(); }
inline size_t col_count(const RationalMatrix& m) { return m.empty() ? 0 : m[0].size(); }

inline RationalMatrix transpose(const RationalMatrix& m) {
    RationalMatrix t(col_count(m), std::vector<Rational>(row_count(m), Rational(0)));
    for (size_t i = 0; i < row_count(m); ++i)
        for (size_t j = 0; j < col_count(m); ++j) t[j][i] = m[i][j];
    return t;
}

inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (col_count(a) != row_count(b)) throw std::invalid_argument("mat_mul: shape mismatch");
    RationalMatrix r(row_count(a), std::vector<Rational>(col_count(b), Rational(0)));
    for (size_t i = 0; i < row_count(a); ++i)
        for (size_t k = 0; k < col_count(a); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < col_count(b); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline bool is_identity(const RationalMatrix& m) {
    if (row_count(m) != col_count(m)) return false;
    for (size_t i = 0; i < row_count(m); ++i)
        for (size_t j = 0; j < col_count(m); ++j)
            if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
    return true;
}

// Gauss-Jordan; nullopt when singular.
inline std::optional<RationalMatrix> mat_inverse(RationalMatrix a) {
    size_t n = row_count(a);
    if (n == 0 || col_count(a) != n) throw std::invalid_argument("mat_inverse: not square");
    RationalMatrix inv = identity_matrix(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Bareiss fraction-free elimination: exact integer determinant.
inline Int int_determinant(std::vector<std::vector<Int>> a) {
    size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("int_determinant: not square");
    Int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // divides exactly (Bareiss)
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace graphpoly
