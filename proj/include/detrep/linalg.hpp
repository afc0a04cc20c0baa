#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detrep/matrix.hpp"

// Exact linear algebra over a field scalar K. K must provide +,-,*,/,
// ==, is_zero(), a default constructor giving 0 and construction from
// small integers. Everything here is deterministic: pivots are always
// the first nonzero candidate.

namespace detrep {

/// Reduced row echelon form in place; returns the pivot column indices.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.swap_rows(p, row);
        const K inv = K(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Exact rank.
template <class K>
std::size_t mat_rank(Matrix<K> m) {
    return rref_in_place(m).size();
}

/// Basis of the right kernel, one column per basis vector (zero columns
/// count when the kernel is trivial). Columns are normalized so that
/// their first nonzero entry is 1.
template <class K>
Matrix<K> mat_kernel(const Matrix<K>& m) {
    Matrix<K> r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    const std::size_t nullity = m.cols() - pivots.size();
    Matrix<K> basis(m.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(free_col, out) = K(1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            basis(pivots[pi], out) = -r(pi, free_col);
        // normalize: first nonzero entry = 1
        std::size_t first = 0;
        while (first < m.cols() && basis(first, out).is_zero()) ++first;
        const K inv = K(1) / basis(first, out);
        for (std::size_t i = first; i < m.cols(); ++i) basis(i, out) = basis(i, out) * inv;
        ++out;
    }
    return basis;
}

/// Exact inverse; throws SingularMatrix when the determinant vanishes.
template <class K>
Matrix<K> mat_inverse(const Matrix<K>& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    Matrix<K> aug = hstack(m, Matrix<K>::identity(m.rows()));
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < m.rows() || (!pivots.empty() && pivots.back() >= m.cols()))
        throw SingularMatrix("matrix is singular");
    Matrix<K> inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            inv(i, j) = aug(i, m.cols() + j);
    return inv;
}

/// Determinant by exact elimination.
template <class K>
K mat_det(Matrix<K> m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    K det = K(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return K(0);
        if (p != col) {
            m.swap_rows(p, col);
            det = -det;
        }
        det = det * m(col, col);
        const K inv = K(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const K f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

/// Solves a * x = rhs column by column; returns the solution with free
/// variables set to zero, or nullopt when the system is inconsistent.
template <class K>
std::optional<Matrix<K>> solve_columns(const Matrix<K>& a, const Matrix<K>& rhs) {
    if (a.rows() != rhs.rows()) throw DimensionMismatch("solve shape mismatch");
    Matrix<K> aug = hstack(a, rhs);
    const auto pivots = rref_in_place(aug);
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix<K> x(a.cols(), rhs.cols());
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x(pivots[pi], j) = aug(pi, a.cols() + j);
    return x;
}

} // namespace detrep
