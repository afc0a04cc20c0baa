#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "detrep/errors.hpp"

namespace detrep {

/// Exact rational scalar. Always kept canonical: lowest terms,
/// denominator > 0, zero is 0/1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}             // NOLINT: implicit by design
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(int n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rat parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(mpz_class(s), 1);
            return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal: " + s);
        }
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_), already_canonical{}); }
    Rat operator+(const Rat& o) const { return Rat(v_ + o.v_, already_canonical{}); }
    Rat operator-(const Rat& o) const { return Rat(v_ - o.v_, already_canonical{}); }
    Rat operator*(const Rat& o) const { return Rat(v_ * o.v_, already_canonical{}); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw Error("rational division by zero");
        return Rat(v_ / o.v_, already_canonical{});
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    Rat inverse() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rat(1 / v_, already_canonical{});
    }

    /// Canonical text form: "p/q", or just "p" when q = 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  private:
    struct already_canonical {};
    Rat(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

} // namespace detrep
