#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "detrep/errors.hpp"
#include "detrep/rational.hpp"

namespace detrep {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Invariant: the leading coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
template <class K>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.push_back(K(v));
        trim();
    }

    static UniPoly constant(K c) {
        UniPoly p;
        if (!c.is_zero()) p.c_.push_back(std::move(c));
        return p;
    }
    static UniPoly monomial(std::size_t deg, K c = K(1)) {
        UniPoly p;
        if (c.is_zero()) return p;
        p.c_.assign(deg + 1, K(0));
        p.c_[deg] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff_at(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& leading() const {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == K(1); }
    bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator-() const {
        std::vector<K> r = c_;
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }

    UniPoly scaled(const K& s) const {
        if (s.is_zero()) return UniPoly();
        std::vector<K> r = c_;
        for (auto& x : r) x = x * s;
        return UniPoly(std::move(r));
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    K evaluate(const K& t) const {
        K acc = K(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long long>(i));
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) throw Error("cannot normalize zero polynomial");
        return scaled(K(1) / c_.back());
    }

    /// Number of leading zero roots (largest k with t^k dividing).
    std::size_t trailing_zeros() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k].is_zero()) ++k;
        return is_zero() ? 0 : k;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Euclidean division: returns (quotient, remainder).
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> unipoly_divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw Error("univariate division by zero");
    std::vector<K> rem(a.coeffs());
    const int db = b.degree();
    const K lead_inv = K(1) / b.leading();
    std::vector<K> q;
    if (a.degree() >= db) q.assign(a.degree() - db + 1, K(0));
    for (int i = a.degree(); i >= db; --i) {
        const K c = rem[i] * lead_inv;
        if (!c.is_zero()) {
            q[i - db] = c;
            for (int j = 0; j <= db; ++j)
                rem[i - db + j] = rem[i - db + j] - c * b.coeff_at(j);
        }
    }
    return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(rem))};
}

/// Monic greatest common divisor; throws BothZero when both inputs vanish.
template <class K>
UniPoly<K> unipoly_gcd(UniPoly<K> a, UniPoly<K> b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");
    while (!b.is_zero()) {
        auto [q, r] = unipoly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> unipoly_xgcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("xgcd of two zero polynomials");
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> u0 = UniPoly<K>::constant(K(1)), u1;
    UniPoly<K> v0, v1 = UniPoly<K>::constant(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = unipoly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<K> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        UniPoly<K> v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const K s = K(1) / r0.leading();
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

template <class K>
UniPoly<K> unipoly_lcm(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<K>();
    auto [q, r] = unipoly_divmod(a * b, unipoly_gcd(a, b));
    internal_check(r.is_zero(), "lcm division not exact");
    return q.monic();
}

/// Divides the column by the monic gcd of its entries; returns the
/// primitive column and the removed content. Throws ZeroColumn when the
/// column vanishes identically.
template <class K>
std::pair<std::vector<UniPoly<K>>, UniPoly<K>> column_primitive_part(const std::vector<UniPoly<K>>& col) {
    UniPoly<K> content;
    for (const auto& e : col) {
        if (e.is_zero()) continue;
        content = content.is_zero() ? e.monic() : unipoly_gcd(content, e);
        if (content.is_one()) break;
    }
    if (content.is_zero()) throw ZeroColumn("primitive part of zero column");
    std::vector<UniPoly<K>> out;
    out.reserve(col.size());
    for (const auto& e : col) {
        auto [q, r] = unipoly_divmod(e, content);
        internal_check(r.is_zero(), "content division not exact");
        out.push_back(std::move(q));
    }
    return {std::move(out), std::move(content)};
}

/// Squarefree part f / gcd(f, f'). In small positive characteristic the
/// derivative may vanish; in that case the input is returned unchanged
/// and callers treat the factor as opaque.
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree part of zero");
    if (f.degree() == 0) return UniPoly<K>::constant(K(1));
    const UniPoly<K> d = f.derivative();
    if (d.is_zero()) return f.monic();
    const UniPoly<K> g = unipoly_gcd(f, d);
    auto [q, r] = unipoly_divmod(f, g);
    internal_check(r.is_zero(), "squarefree division not exact");
    return q.monic();
}

namespace unipolydetail {

inline std::vector<mpz_class> bounded_divisors(mpz_class n) {
    // trial division up to 10^5; an unfactored remainder joins as a unit
    std::vector<std::pair<mpz_class, unsigned>> primes;
    n = abs(n);
    if (n == 0) return {};
    for (mpz_class p = 2; p * p <= n && p <= 100000; p = (p == 2 ? 3 : p + 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) primes.emplace_back(p, e);
    }
    if (n > 1) primes.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > 20000) return divs; // enumeration guard
            }
        }
    }
    return divs;
}

} // namespace unipolydetail

/// Rational root extraction via the rational root theorem with bounded
/// trial-division factoring. Returns ((root, multiplicity)..., remainder);
/// roots with very large prime numerators/denominators may stay inside
/// the remainder, which downstream code treats as an opaque factor.
inline std::pair<std::vector<std::pair<Rat, std::size_t>>, UniPoly<Rat>>
extract_rational_roots(UniPoly<Rat> f) {
    if (f.is_zero()) throw ZeroPolynomial("roots of zero polynomial");
    std::vector<std::pair<Rat, std::size_t>> roots;

    const std::size_t zeros = f.trailing_zeros();
    if (zeros > 0) {
        roots.emplace_back(Rat(0), zeros);
        std::vector<Rat> shifted(f.coeffs().begin() + static_cast<long>(zeros), f.coeffs().end());
        f = UniPoly<Rat>(std::move(shifted));
    }
    if (f.degree() < 1) return {std::move(roots), f};

    // clear denominators: integer polynomial with the same roots
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = den_lcm / g * c.den();
    }
    const mpz_class a0 = Rat(f.coeff_at(0) * Rat(den_lcm, 1)).num();
    const mpz_class an = Rat(f.leading() * Rat(den_lcm, 1)).num();

    std::vector<Rat> candidates;
    for (const auto& p : unipolydetail::bounded_divisors(a0))
        for (const auto& q : unipolydetail::bounded_divisors(an)) {
            candidates.push_back(Rat(p, q));
            candidates.push_back(Rat(-p, q));
        }

    for (const auto& cand : candidates) {
        std::size_t mult = 0;
        while (f.degree() >= 1 && f.evaluate(cand).is_zero()) {
            auto [q, r] = unipoly_divmod(f, UniPoly<Rat>(std::vector<Rat>{-cand, Rat(1)}));
            internal_check(r.is_zero(), "root deflation not exact");
            f = std::move(q);
            ++mult;
        }
        if (mult) roots.emplace_back(cand, mult);
    }
    return {std::move(roots), f};
}

/// Rational function num/den with den monic and gcd(num, den) = 1.
/// This is the function field the generic-rank computations run over.
template <class K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(UniPoly<K>::constant(K(1))) {}
    RatFunc(long long n) : RatFunc(UniPoly<K>::constant(K(n))) {} // NOLINT
    explicit RatFunc(UniPoly<K> n) : num_(std::move(n)), den_(UniPoly<K>::constant(K(1))) {}
    RatFunc(UniPoly<K> n, UniPoly<K> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const UniPoly<K>& num() const { return num_; }
    const UniPoly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw Error("rational function division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

  private:
    void reduce() {
        if (den_.is_zero()) throw Error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly<K>::constant(K(1));
            return;
        }
        const UniPoly<K> g = unipoly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = unipoly_divmod(num_, g).first;
            den_ = unipoly_divmod(den_, g).first;
        }
        const K s = K(1) / den_.leading();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }

    UniPoly<K> num_, den_;
};

} // namespace detrep
