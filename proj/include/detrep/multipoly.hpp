#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "detrep/matrix.hpp"

namespace detrep {

using Exponents = std::vector<unsigned>;

inline unsigned exponents_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// Term order: total degree first, then lexicographic. The map order is
/// the canonical serialization order (ascending).
struct DegLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned da = exponents_degree(a), db = exponents_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate polynomial in a fixed number of variables.
/// No zero coefficients are ever stored.
template <class K>
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, K, DegLexLess>;

    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, K c) {
        MultiPoly p(nvars);
        p.add_term(Exponents(nvars, 0), std::move(c));
        return p;
    }
    /// The variable x_{i} (0-based index).
    static MultiPoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw DimensionMismatch("variable index out of range");
        MultiPoly p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.add_term(e, K(1));
        return p;
    }
    static MultiPoly monomial(std::size_t nvars, Exponents e, K c) {
        if (e.size() != nvars) throw DimensionMismatch("exponent vector length mismatch");
        MultiPoly p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const K& c) {
        if (e.size() != nvars_) throw DimensionMismatch("exponent vector length mismatch");
        accumulate(e, c);
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.accumulate(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.accumulate(e, -c);
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly r(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.accumulate(e, ca * cb);
            }
        }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    MultiPoly scaled(const K& c) const {
        MultiPoly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Maximal total degree; -1 for the zero polynomial.
    int total_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(exponents_degree(terms_.rbegin()->first));
    }
    /// Minimal total degree among stored terms; -1 for zero.
    int min_degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(exponents_degree(terms_.begin()->first));
    }
    bool is_homogeneous() const { return is_zero() || total_degree() == min_degree(); }

    MultiPoly homogeneous_component(unsigned d) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (exponents_degree(e) == d) r.terms_.emplace(e, c);
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw DimensionMismatch("evaluation point length mismatch");
        K acc = K(0);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
            acc += t;
        }
        return acc;
    }

    /// f(x + p): recentering at p by exact expansion.
    MultiPoly shifted(const std::vector<K>& p) const {
        if (p.size() != nvars_) throw DimensionMismatch("shift point length mismatch");
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            MultiPoly acc = constant(nvars_, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (p[i].is_zero()) {
                    Exponents mono(nvars_, 0);
                    mono[i] = e[i];
                    acc = acc * monomial(nvars_, mono, K(1));
                } else {
                    MultiPoly binom = variable(nvars_, i) + constant(nvars_, p[i]);
                    for (unsigned k = 0; k < e[i]; ++k) acc = acc * binom;
                }
            }
            r += acc;
        }
        return r;
    }

  private:
    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials in different rings");
    }
    void accumulate(const Exponents& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::size_t nvars_;
    TermMap terms_;
};

/// Exact division f / g in the polynomial ring; nullopt when g does not
/// divide f. Division runs on deglex leading terms.
template <class K>
std::optional<MultiPoly<K>> divide_exact(const MultiPoly<K>& f, const MultiPoly<K>& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    MultiPoly<K> q(f.nvars());
    MultiPoly<K> rem = f;
    const auto& glead = *g.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Exponents e(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (rlead.first[i] < glead.first[i]) return std::nullopt;
            e[i] = rlead.first[i] - glead.first[i];
        }
        const K c = rlead.second / glead.second;
        const MultiPoly<K> t = MultiPoly<K>::monomial(f.nvars(), e, c);
        q += t;
        rem -= t * g;
    }
    return q;
}

/// Fraction-free Bareiss determinant over the polynomial ring. Every
/// division in the update is exact.
template <class K>
MultiPoly<K> det_multipoly_matrix(const Matrix<MultiPoly<K>>& input) {
    if (!input.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) throw DimensionMismatch("determinant of empty matrix");
    const std::size_t nvars = input(0, 0).nvars();
    if (n == 1) return input(0, 0);

    Matrix<MultiPoly<K>> m = input;
    MultiPoly<K> prev = MultiPoly<K>::constant(nvars, K(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return MultiPoly<K>(nvars); // zero column: det = 0
        if (p != k) {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly<K> num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto div = divide_exact(num, prev);
                internal_check(div.has_value(), "bareiss division not exact");
                m(i, j) = std::move(*div);
            }
            m(i, k) = MultiPoly<K>(nvars);
        }
        prev = m(k, k);
    }
    MultiPoly<K> det = m(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace detrep
