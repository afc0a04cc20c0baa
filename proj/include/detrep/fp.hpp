#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "detrep/errors.hpp"

namespace detrep {

namespace fpdetail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace fpdetail

/// Prime-field scalar with a process-wide modulus context, used for the
/// fast randomized testing mode. The modulus must be set before any value
/// is created and is never mixed within one run.
class Fp {
  public:
    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p >= (1ull << 62) || !fpdetail::is_prime_u64(p))
            throw ParseError("prime-field modulus must be a prime below 2^62");
        modulus_ = p;
    }
    static std::uint64_t modulus() {
        if (modulus_ == 0) throw InternalError("prime-field modulus not set");
        return modulus_;
    }

    Fp() : v_(0) {}
    Fp(long long n) {                  // NOLINT: implicit by design
        const std::uint64_t p = modulus();
        long long m = n % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(m);
    }
    Fp(long n) : Fp(static_cast<long long>(n)) {}
    Fp(int n) : Fp(static_cast<long long>(n)) {}

    static Fp from_residue(std::uint64_t v) {
        Fp x;
        x.v_ = v % modulus();
        return x;
    }

    std::uint64_t residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return from_residue(v_ == 0 ? 0 : modulus() - v_); }
    Fp operator+(const Fp& o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= modulus()) s -= modulus();
        return from_residue(s);
    }
    Fp operator-(const Fp& o) const { return *this + (-o); }
    Fp operator*(const Fp& o) const { return from_residue(fpdetail::mulmod(v_, o.v_, modulus())); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (v_ == 0) throw Error("inverse of zero");
        return from_residue(fpdetail::powmod(v_, modulus() - 2, modulus()));
    }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }
    bool operator<(const Fp& o) const { return v_ < o.v_; }

    std::string str() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

  private:
    inline static thread_local std::uint64_t modulus_ = 0;
    std::uint64_t v_;
};

} // namespace detrep
