#pragma once

// Test-side oracles, kept independent of the library code paths they
// check. The determinant oracles expand along the first row recursively;
// the equivalence oracle solves the bilinear system A = S*B*T directly
// through a rank-one factorization of the full coefficient tensor.

#include <optional>
#include <utility>
#include <vector>

#include "detrep/curve.hpp"
#include "detrep/frobenius.hpp"
#include "detrep/linform.hpp"
#include "detrep/multipoly.hpp"

namespace oracles {

using namespace detrep;

/// Cofactor expansion along the first row; works over any commutative
/// ring element with +, *, unary -.
template <class R>
R det_cofactor(const Matrix<R>& m, const R& zero) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    R acc = zero;
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < n; ++i) rest.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const R minor = det_cofactor(m.submatrix(rest, cols), zero);
        const R contrib = m(0, j) * minor;
        acc = (j % 2 == 0) ? acc + contrib : acc + (-contrib);
    }
    return acc;
}

template <class K>
K det_scalar(const Matrix<K>& m) {
    return det_cofactor(m, K(0));
}

template <class K>
MultiPoly<K> det_poly(const Matrix<MultiPoly<K>>& m) {
    return det_cofactor(m, MultiPoly<K>(m(0, 0).nvars()));
}

/// Largest k with a nonvanishing k x k minor.
template <class K>
std::size_t rank_by_minors(const Matrix<K>& m) {
    std::size_t best = 0;
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        bool found = false;
        subsetdetail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            subsetdetail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (found) return;
                if (!det_scalar(m.submatrix(rows, cols)).is_zero()) found = true;
            });
        });
        if (found) best = k;
    }
    return best;
}

/// Exact solver for the bilinear system A = S * (B or B^t) * T over the
/// given branch: the coefficient tensor of A in the entries of the base,
/// reshaped into the (n^2 x n^2) matrix W[(i,k)][(l,j)], must have rank
/// one with factors reshaping into invertible S and T. Returns the pair
/// when it exists. This decides equivalence per branch outright, so it
/// cross-checks both refutations and exclusivity.
template <class K>
std::optional<std::pair<Matrix<K>, Matrix<K>>> solve_bilinear(const LinFormMatrix<K>& a,
                                                              const LinFormMatrix<K>& b,
                                                              bool transposed) {
    const std::size_t n = a.size();
    const LinFormMatrix<K> base = transposed ? transpose(b) : b;

    // coordinates of a's entries in base's entries, solved column-wise
    const Matrix<K> basis = transpose(base.coefficient_matrix());
    const Matrix<K> rhs = transpose(a.coefficient_matrix());
    const auto sol = solve_columns(basis, rhs);
    if (!sol) return std::nullopt;

    Matrix<K> w(n * n, n * n); // rows (i,k), cols (l,j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    w(i * n + k, l * n + j) = (*sol)(k * n + l, i * n + j);

    // rank-one factorization of w
    std::size_t i0 = n * n, j0 = n * n;
    for (std::size_t i = 0; i < n * n && i0 == n * n; ++i)
        for (std::size_t j = 0; j < n * n; ++j)
            if (!w(i, j).is_zero()) {
                i0 = i;
                j0 = j;
                break;
            }
    if (i0 == n * n) return std::nullopt;
    std::vector<K> p(n * n), q(n * n);
    const K inv = K(1) / w(i0, j0);
    for (std::size_t i = 0; i < n * n; ++i) p[i] = w(i, j0) * inv;
    for (std::size_t j = 0; j < n * n; ++j) q[j] = w(i0, j);
    for (std::size_t i = 0; i < n * n; ++i)
        for (std::size_t j = 0; j < n * n; ++j)
            if (w(i, j) != p[i] * q[j]) return std::nullopt;

    Matrix<K> s(n, n), t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) s(i, k) = p[i * n + k];
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) t(l, j) = q[l * n + j];
    if (mat_det(s).is_zero() || mat_det(t).is_zero()) return std::nullopt;

    // verify by direct multiplication, independently of the factorization
    if (a != mul_right(mul_left(s, base), t)) return std::nullopt;
    return std::make_pair(std::move(s), std::move(t));
}

/// Checks a claimed leading form through univariate restrictions: for a
/// direction x0, the pullback lambda -> f(p + lambda*x0) must vanish to
/// order exactly `mult` with lowest coefficient form(x0) (whenever
/// form(x0) != 0).
template <class K>
bool leading_form_matches_on_line(const MultiPoly<K>& f, const std::vector<K>& p,
                                  std::size_t mult, const MultiPoly<K>& form,
                                  const std::vector<K>& direction) {
    std::vector<UniPoly<K>> coords(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        coords[i] = UniPoly<K>(std::vector<K>{p[i], direction[i]});
    const UniPoly<K> restricted = compose_with_curve(f, coords);
    const K expected = form.evaluate(direction);
    if (expected.is_zero()) return true; // direction misses the cone information
    if (restricted.is_zero()) return false;
    return restricted.trailing_zeros() == mult &&
           restricted.coeff_at(mult) == expected;
}

} // namespace oracles
