#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detrep/linform.hpp"

// Constructive matrix-of-linear-forms equivalence: given square matrices
// A, B of independent linear forms with proportional determinants, find
// invertible scalar matrices S, T and a transpose flag with A = S*B*T or
// A = S*B^t*T, or refute with a concrete witness. The factors are unique
// up to the scalar pair (lambda, 1/lambda); the returned certificate is
// pinned by normalizing the first nonzero entry of S to 1.

namespace detrep {

template <class K>
struct Tensor4 {
    std::size_t n = 0;
    std::vector<K> v; // ((i*n + j)*n + k)*n + l

    Tensor4() = default;
    explicit Tensor4(std::size_t n_) : n(n_), v(n_ * n_ * n_ * n_, K(0)) {}

    K& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return v[((i * n + j) * n + k) * n + l];
    }
    const K& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return v[((i * n + j) * n + k) * n + l];
    }
};

/// Coordinates of every entry of a in the basis given by the entries of
/// b: a_ij = sum_kl coords(i,j,k,l) b_kl. Requires b's entries to be
/// independent; throws NotInSpan when some entry of a lies outside their
/// span.
template <class K>
Tensor4<K> express_in_entry_basis(const LinFormMatrix<K>& a, const LinFormMatrix<K>& b) {
    if (a.size() != b.size() || a.ambient() != b.ambient())
        throw DimensionMismatch("matrices of different shape");
    if (!entry_independence_check(b))
        throw PreconditionError("basis matrix does not have independent entries");

    const std::size_t n = a.size();
    // columns of the system matrix are the coefficient vectors of b_kl
    const Matrix<K> basis = transpose(b.coefficient_matrix());
    const Matrix<K> rhs = transpose(a.coefficient_matrix());
    const auto sol = solve_columns(basis, rhs);
    if (!sol) throw NotInSpan("an entry of A lies outside the span of B's entries");

    Tensor4<K> t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    t.at(i, j, k, l) = (*sol)(k * n + l, i * n + j);
    return t;
}

/// Slice l collects the coefficient of the diagonal entry b_ll in each
/// a_ij.
template <class K>
std::vector<Matrix<K>> coefficient_slices(const Tensor4<K>& coords) {
    std::vector<Matrix<K>> slices;
    slices.reserve(coords.n);
    for (std::size_t l = 0; l < coords.n; ++l) {
        Matrix<K> s(coords.n, coords.n);
        for (std::size_t i = 0; i < coords.n; ++i)
            for (std::size_t j = 0; j < coords.n; ++j)
                s(i, j) = coords.at(i, j, l, l);
        slices.push_back(std::move(s));
    }
    return slices;
}

/// Factors a rank-one matrix as p * q with the first nonzero entry of the
/// column p normalized to 1. Throws RankNotOne for rank 0 or rank >= 2;
/// that failure is the refutation witness in the decomposition.
template <class K>
std::pair<std::vector<K>, std::vector<K>> rank1_factor(const Matrix<K>& m) {
    std::size_t i0 = m.rows(), j0 = m.cols();
    for (std::size_t i = 0; i < m.rows() && i0 == m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) {
                i0 = i;
                j0 = j;
                break;
            }
    if (i0 == m.rows()) throw RankNotOne("zero matrix has rank 0");

    const K pivot_inv = K(1) / m(i0, j0);
    std::vector<K> p(m.rows()), q(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) p[i] = m(i, j0) * pivot_inv;
    for (std::size_t j = 0; j < m.cols(); ++j) q[j] = m(i0, j);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != p[i] * q[j]) throw RankNotOne("matrix has rank at least 2");
    return {std::move(p), std::move(q)};
}

template <class K>
struct EquivalenceCertificate {
    Matrix<K> s, t;
    bool transposed = false;
    K c = K(1); // determinant ratio det(A) = c * det(B)
};

/// Either a certificate or a refutation witness.
template <class K>
struct FrobeniusOutcome {
    std::optional<EquivalenceCertificate<K>> certificate;
    std::string witness;

    bool equivalent() const { return certificate.has_value(); }
};

/// Direct check of the flagged identity A = S*B*T or A = S*B^t*T.
template <class K>
bool verify_certificate(const LinFormMatrix<K>& a, const LinFormMatrix<K>& b,
                        const EquivalenceCertificate<K>& cert) {
    if (a.size() != b.size() || a.ambient() != b.ambient())
        throw DimensionMismatch("matrices of different shape");
    if (cert.s.rows() != a.size() || cert.s.cols() != a.size() ||
        cert.t.rows() != a.size() || cert.t.cols() != a.size())
        throw DimensionMismatch("certificate factor shape mismatch");
    const LinFormMatrix<K> base = cert.transposed ? transpose(b) : b;
    return a == mul_right(mul_left(cert.s, base), cert.t);
}

namespace frobdetail {

/// Recovers the diagonal conjugator: k with bt = K B K^{-1} (plain) or
/// bt = K B^t K^{-1} (transposed), i.e. bt_ij = (k_i/k_j) * b_ij resp.
/// b_ji. Sets k_0 = 1 and derives k_i from already-known rows in
/// ascending order, then checks every entry. Returns nullopt when the
/// branch is inconsistent.
template <class K>
std::optional<std::vector<K>> recover_conjugator(const LinFormMatrix<K>& bt,
                                                 const LinFormMatrix<K>& b, bool transposed) {
    const std::size_t n = b.size();
    std::vector<K> k(n, K(0));
    std::vector<bool> known(n, false);
    k[0] = K(1);
    known[0] = true;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !known[j]) continue;
            // bt_ji = (k_j / k_i) * den with den = b_ji (plain), b_ij (transposed)
            const LinearForm<K>& num = bt.at(j, i);
            const LinearForm<K>& den = transposed ? b.at(i, j) : b.at(j, i);
            if (num.is_zero() || den.is_zero()) continue;
            const auto lambda = proportionality_ratio(num, den);
            if (!lambda || lambda->is_zero()) continue;
            k[i] = k[j] / *lambda;
            known[i] = true;
            break;
        }
        if (!known[i]) return std::nullopt;
    }
    // global verification: k_j * bt_ij == k_i * (b_ij | b_ji) entrywise
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const LinearForm<K>& base = transposed ? b.at(j, i) : b.at(i, j);
            if (bt.at(i, j).scaled(k[j]) != base.scaled(k[i])) return std::nullopt;
        }
    return k;
}

} // namespace frobdetail

/// The decomposition algorithm. Pipeline: express A in B's entries,
/// check determinant proportionality det(A) = c det(B), take the
/// diagonal coefficient slices and factor each as a rank-one product,
/// assemble P and Q, check det(P) det(Q) = c, conjugate back to
/// Bt = P^{-1} A Q^{-1} and recover the diagonal conjugator on the plain
/// branch first, the transposed branch second.
template <class K>
FrobeniusOutcome<K> frobenius_decompose(const LinFormMatrix<K>& a, const LinFormMatrix<K>& b) {
    if (a.size() != b.size() || a.ambient() != b.ambient())
        throw DimensionMismatch("matrices of different shape");
    if (!entry_independence_check(a) || !entry_independence_check(b))
        throw PreconditionError("frobenius_decompose requires independent entries on both sides");

    FrobeniusOutcome<K> out;
    const std::size_t n = a.size();

    if (n == 1) { // degenerate 1x1 case, accepted trivially
        const auto lambda = proportionality_ratio(a.at(0, 0), b.at(0, 0));
        if (!lambda || lambda->is_zero()) {
            out.witness = "1x1 entries are not proportional";
            return out;
        }
        EquivalenceCertificate<K> cert;
        cert.s = Matrix<K>::identity(1);
        cert.t = Matrix<K>::identity(1);
        cert.t(0, 0) = *lambda;
        cert.c = *lambda;
        out.certificate = std::move(cert);
        return out;
    }

    Tensor4<K> coords(n);
    try {
        coords = express_in_entry_basis(a, b);
    } catch (const NotInSpan& e) {
        out.witness = e.what();
        return out;
    }

    // determinant proportionality and the constant c
    const MultiPoly<K> det_a = determinant_hypersurface(a);
    const MultiPoly<K> det_b = determinant_hypersurface(b);
    internal_check(!det_b.is_zero(), "independent entries force a nonzero determinant");
    if (det_a.is_zero()) {
        out.witness = "det(A) vanishes identically while det(B) does not";
        return out;
    }
    const K c = det_a.terms().rbegin()->second / det_b.terms().rbegin()->second;
    if (det_a != det_b.scaled(c) || c.is_zero()) {
        out.witness = "det(A) is not a nonzero scalar multiple of det(B)";
        return out;
    }

    // rank-one slices give the columns of P and the rows of Q
    const auto slices = coefficient_slices(coords);
    Matrix<K> p(n, n), q(n, n);
    for (std::size_t l = 0; l < n; ++l) {
        try {
            auto [pl, ql] = rank1_factor(slices[l]);
            for (std::size_t i = 0; i < n; ++i) p(i, l) = pl[i];
            for (std::size_t j = 0; j < n; ++j) q(l, j) = ql[j];
        } catch (const RankNotOne& e) {
            out.witness = "coefficient slice " + std::to_string(l) + " is not rank one: " + e.what();
            return out;
        }
    }

    Matrix<K> p_inv, q_inv;
    try {
        p_inv = mat_inverse(p);
    } catch (const SingularMatrix&) {
        out.witness = "slice column factor P is singular";
        return out;
    }
    try {
        q_inv = mat_inverse(q);
    } catch (const SingularMatrix&) {
        out.witness = "slice row factor Q is singular";
        return out;
    }
    if (mat_det(p) * mat_det(q) != c) {
        out.witness = "det(P) det(Q) does not match the determinant ratio";
        return out;
    }

    const LinFormMatrix<K> bt = mul_right(mul_left(p_inv, a), q_inv);
    const auto k_plain = frobdetail::recover_conjugator(bt, b, false);
    const auto k_trans = frobdetail::recover_conjugator(bt, b, true);
    if (k_plain && k_trans)
        throw InternalError("both equivalence branches verified; impossible for r >= 1");
    if (!k_plain && !k_trans) {
        out.witness = "no diagonal conjugation matches either branch";
        return out;
    }

    const bool transposed = k_trans.has_value();
    const std::vector<K>& k = transposed ? *k_trans : *k_plain;
    Matrix<K> s = p, t_mat = q;
    for (std::size_t l = 0; l < n; ++l) {
        const K inv = K(1) / k[l];
        for (std::size_t i = 0; i < n; ++i) s(i, l) = s(i, l) * k[l];
        for (std::size_t j = 0; j < n; ++j) t_mat(l, j) = t_mat(l, j) * inv;
    }

    // fix the scalar ambiguity: first nonzero entry of S becomes 1
    K pivot = K(0);
    for (std::size_t i = 0; i < n && pivot.is_zero(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!s(i, j).is_zero()) {
                pivot = s(i, j);
                break;
            }
    internal_check(!pivot.is_zero(), "S cannot be the zero matrix");
    s = s.scaled(K(1) / pivot);
    t_mat = t_mat.scaled(pivot);

    EquivalenceCertificate<K> cert;
    cert.s = std::move(s);
    cert.t = std::move(t_mat);
    cert.transposed = transposed;
    cert.c = c;
    internal_check(verify_certificate(a, b, cert), "constructed certificate failed verification");
    internal_check(mat_det(cert.s) * mat_det(cert.t) == c, "certificate determinant ratio mismatch");
    out.certificate = std::move(cert);
    return out;
}

} // namespace detrep
