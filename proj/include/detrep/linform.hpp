#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detrep/linalg.hpp"
#include "detrep/matrix.hpp"
#include "detrep/multipoly.hpp"
#include "detrep/rng.hpp"
#include "detrep/unipoly.hpp"

namespace detrep {

/// Homogeneous degree-1 polynomial in g ambient variables, stored as its
/// coefficient vector.
template <class K>
struct LinearForm {
    std::vector<K> coeff;

    LinearForm() = default;
    explicit LinearForm(std::size_t ambient) : coeff(ambient, K(0)) {}
    explicit LinearForm(std::vector<K> c) : coeff(std::move(c)) {}

    std::size_t ambient() const { return coeff.size(); }
    bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }

    K evaluate(const std::vector<K>& p) const {
        if (p.size() != coeff.size()) throw DimensionMismatch("point length mismatch");
        K acc = K(0);
        for (std::size_t i = 0; i < coeff.size(); ++i) acc += coeff[i] * p[i];
        return acc;
    }

    MultiPoly<K> to_multipoly() const {
        MultiPoly<K> p(coeff.size());
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            Exponents e(coeff.size(), 0);
            e[i] = 1;
            p.add_term(e, coeff[i]);
        }
        return p;
    }

    /// Pullback along a parametrized curve: substitutes coordinate i by
    /// the i-th coordinate function.
    UniPoly<K> compose(const std::vector<UniPoly<K>>& coords) const {
        if (coords.size() != coeff.size()) throw DimensionMismatch("curve ambient mismatch");
        UniPoly<K> acc;
        for (std::size_t i = 0; i < coeff.size(); ++i)
            acc += coords[i].scaled(coeff[i]);
        return acc;
    }

    LinearForm operator+(const LinearForm& o) const {
        if (coeff.size() != o.coeff.size()) throw DimensionMismatch("form ambient mismatch");
        LinearForm r = *this;
        for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
        return r;
    }
    LinearForm scaled(const K& c) const {
        LinearForm r = *this;
        for (auto& x : r.coeff) x = x * c;
        return r;
    }
    bool operator==(const LinearForm& o) const { return coeff == o.coeff; }
    bool operator!=(const LinearForm& o) const { return coeff != o.coeff; }
};

/// The scalar lambda with u = lambda * v, when u and v are proportional
/// and v is nonzero; nullopt otherwise.
template <class K>
std::optional<K> proportionality_ratio(const LinearForm<K>& u, const LinearForm<K>& v) {
    if (u.ambient() != v.ambient() || v.is_zero()) return std::nullopt;
    std::size_t m = 0;
    while (v.coeff[m].is_zero()) ++m;
    const K lambda = u.coeff[m] / v.coeff[m];
    for (std::size_t i = 0; i < v.ambient(); ++i)
        if (u.coeff[i] != lambda * v.coeff[i]) return std::nullopt;
    return lambda;
}

/// Square matrix of linear forms on a g-dimensional ambient space; this
/// is the shape of a determinantal representation of a degree-(r+1)
/// hypersurface, r+1 being the matrix size.
template <class K>
class LinFormMatrix {
  public:
    LinFormMatrix() = default;
    LinFormMatrix(std::size_t size, std::size_t ambient)
        : size_(size), ambient_(ambient), e_(size * size, LinearForm<K>(ambient)) {}

    std::size_t size() const { return size_; }
    std::size_t ambient() const { return ambient_; }

    LinearForm<K>& at(std::size_t i, std::size_t j) { return e_[i * size_ + j]; }
    const LinearForm<K>& at(std::size_t i, std::size_t j) const { return e_[i * size_ + j]; }

    bool operator==(const LinFormMatrix& o) const {
        return size_ == o.size_ && ambient_ == o.ambient_ && e_ == o.e_;
    }
    bool operator!=(const LinFormMatrix& o) const { return !(*this == o); }

    /// Entry coefficient vectors as rows of a size^2 x g matrix, entry
    /// (i,j) in row i*size + j.
    Matrix<K> coefficient_matrix() const {
        Matrix<K> m(size_ * size_, ambient_);
        for (std::size_t k = 0; k < size_ * size_; ++k)
            for (std::size_t v = 0; v < ambient_; ++v)
                m(k, v) = e_[k].coeff[v];
        return m;
    }

  private:
    std::size_t size_ = 0, ambient_ = 0;
    std::vector<LinearForm<K>> e_;
};

template <class K>
LinFormMatrix<K> transpose(const LinFormMatrix<K>& m) {
    LinFormMatrix<K> r(m.size(), m.ambient());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r.at(j, i) = m.at(i, j);
    return r;
}

/// s * m for a scalar matrix s: rows of m recombine linearly.
template <class K>
LinFormMatrix<K> mul_left(const Matrix<K>& s, const LinFormMatrix<K>& m) {
    if (s.cols() != m.size() || s.rows() != m.size())
        throw DimensionMismatch("scalar factor shape mismatch");
    LinFormMatrix<K> r(m.size(), m.ambient());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            LinearForm<K> acc(m.ambient());
            for (std::size_t k = 0; k < m.size(); ++k)
                acc = acc + m.at(k, j).scaled(s(i, k));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

/// m * t for a scalar matrix t.
template <class K>
LinFormMatrix<K> mul_right(const LinFormMatrix<K>& m, const Matrix<K>& t) {
    if (t.rows() != m.size() || t.cols() != m.size())
        throw DimensionMismatch("scalar factor shape mismatch");
    LinFormMatrix<K> r(m.size(), m.ambient());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            LinearForm<K> acc(m.ambient());
            for (std::size_t k = 0; k < m.size(); ++k)
                acc = acc + m.at(i, k).scaled(t(k, j));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

/// Coordinate tensor of the trace pairing: value (i, j, k) is the k-th
/// ambient coefficient of the (i, j) entry form.
template <class K>
struct PetriTensor {
    std::size_t r = 0, g = 0;
    std::vector<K> values; // ((i * (r+1) + j) * g + k)

    PetriTensor() = default;
    PetriTensor(std::size_t r_, std::size_t g_)
        : r(r_), g(g_), values((r_ + 1) * (r_ + 1) * g_, K(0)) {}

    K& at(std::size_t i, std::size_t j, std::size_t k) {
        return values[(i * (r + 1) + j) * g + k];
    }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const {
        return values[(i * (r + 1) + j) * g + k];
    }
};

template <class K>
LinFormMatrix<K> build_from_petri_tensor(const PetriTensor<K>& t) {
    LinFormMatrix<K> m(t.r + 1, t.g);
    for (std::size_t i = 0; i <= t.r; ++i)
        for (std::size_t j = 0; j <= t.r; ++j)
            for (std::size_t k = 0; k < t.g; ++k)
                m.at(i, j).coeff[k] = t.at(i, j, k);
    return m;
}

template <class K>
PetriTensor<K> petri_tensor_of(const LinFormMatrix<K>& m) {
    PetriTensor<K> t(m.size() - 1, m.ambient());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            for (std::size_t k = 0; k < m.ambient(); ++k)
                t.at(i, j, k) = m.at(i, j).coeff[k];
    return t;
}

/// True iff the (r+1)^2 entry forms are linearly independent vectors in
/// g-space. This is the operational form of trace-pairing injectivity;
/// it can only hold when g >= (r+1)^2.
template <class K>
bool entry_independence_check(const LinFormMatrix<K>& m) {
    const std::size_t n2 = m.size() * m.size();
    if (m.ambient() < n2) return false;
    return mat_rank(m.coefficient_matrix()) == n2;
}

/// Entrywise evaluation at an ambient point.
template <class K>
Matrix<K> evaluate_at_point(const LinFormMatrix<K>& m, const std::vector<K>& p) {
    if (p.size() != m.ambient()) throw DimensionMismatch("point length mismatch");
    Matrix<K> r(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            r(i, j) = m.at(i, j).evaluate(p);
    return r;
}

namespace subsetdetail {

/// Calls fn on every size-k index subset of {0..n-1}, ascending order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace subsetdetail

/// Probabilistic surrogate for minor genericity: samples `trials` integer
/// points and requires every k x k minor, k <= r, to be nonzero at at
/// least one of them. A minor of degree k vanishes at a uniform sample
/// from {-10..10} with probability at most k/21 unless it is identically
/// zero, so a false refutation of a generic instance has probability at
/// most sum over minors of (r/21)^trials.
template <class K>
bool genericity_probe(const LinFormMatrix<K>& m, std::size_t trials, Rng& rng) {
    if (trials == 0) return true;
    const std::size_t n = m.size();
    std::vector<Matrix<K>> samples;
    samples.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<K> p(m.ambient());
        for (auto& x : p) x = K(rng.int_in(-10, 10));
        samples.push_back(evaluate_at_point(m, p));
    }
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        bool bad = false;
        subsetdetail::for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
            if (bad) return;
            subsetdetail::for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
                if (bad) return;
                bool seen_nonzero = false;
                for (const auto& s : samples) {
                    if (!mat_det(s.submatrix(rows, cols)).is_zero()) {
                        seen_nonzero = true;
                        break;
                    }
                }
                if (!seen_nonzero) bad = true;
            });
        });
        if (bad) return false;
    }
    return true;
}

/// Exact determinant of the matrix of forms: a homogeneous polynomial of
/// degree r+1 on the ambient space (or zero).
template <class K>
MultiPoly<K> determinant_hypersurface(const LinFormMatrix<K>& m) {
    Matrix<MultiPoly<K>> p(m.size(), m.size(), MultiPoly<K>(m.ambient()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            p(i, j) = m.at(i, j).to_multipoly();
    return det_multipoly_matrix(p);
}

/// Lowest nonzero homogeneous component of a local equation recentered
/// at a point, together with its degree (the multiplicity). Multiplicity
/// zero signals that the point does not lie on the hypersurface.
template <class K>
struct LeadingForm {
    std::size_t multiplicity = 0;
    MultiPoly<K> form;

    LeadingForm() : form(0) {}
    LeadingForm(std::size_t n, MultiPoly<K> f) : multiplicity(n), form(std::move(f)) {}
};

template <class K>
LeadingForm<K> tangent_cone_leading_form(const MultiPoly<K>& f, const std::vector<K>& p) {
    if (f.is_zero()) throw ZeroPolynomial("tangent cone of the zero polynomial");
    const MultiPoly<K> local = f.shifted(p);
    internal_check(!local.is_zero(), "recentered polynomial vanished");
    const unsigned n = static_cast<unsigned>(local.min_degree());
    return LeadingForm<K>(n, local.homogeneous_component(n));
}

} // namespace detrep
