#pragma once

#include <cstdint>
#include <random>

#include "detrep/errors.hpp"

namespace detrep {

/// Seeded generator; every random choice in the library flows through an
/// explicitly passed instance of this class. Bounded draws use rejection
/// sampling so that streams are identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi) {
        if (lo > hi) throw InternalError("empty rng range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<long long>(next()); // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<long long>(x % span);
    }

    long long nonzero_int_in(long long lo, long long hi) {
        long long x;
        do {
            x = int_in(lo, hi);
        } while (x == 0);
        return x;
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace detrep
