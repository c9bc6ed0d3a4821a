#pragma once

#include <cstdint>

#include "waring/rational.hpp"
#include "waring/unipoly.hpp"

namespace waring {

// Counter-based deterministic stream: every sampled object derives from
// (seed, stream) alone, so reruns are bit-identical across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL)) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi].
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational next_rational(long max_num = 9, long max_den = 9) {
        return rat(next_in(-max_num, max_num), next_in(1, max_den));
    }

    Rational next_nonzero_rational(long max_num = 9, long max_den = 9) {
        Rational q = next_rational(max_num, max_den);
        while (q == 0) q = next_rational(max_num, max_den);
        return q;
    }

  private:
    std::uint64_t state_;
};

}  // namespace waring
