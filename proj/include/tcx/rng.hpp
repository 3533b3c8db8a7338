#ifndef TCX_RNG_HPP
#define TCX_RNG_HPP

#include <cstdint>

#include "tcx/rational.hpp"

namespace tcx {

/// splitmix64: tiny, portable, and fully deterministic across platforms,
/// which std:: distributions are not. Campaign reproducibility depends on it.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n) by rejection
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~0ull - ~0ull % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// small rational with |num| <= bound, 1 <= den <= bound
    Rat small_rat(long bound = 7) {
        return rat(range(-bound, bound), range(1, bound));
    }

    Rat small_rat_nonzero(long bound = 7) {
        Rat q;
        do { q = small_rat(bound); } while (q == 0);
        return q;
    }

    /// independent stream for trial t of a seeded campaign
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        Rng mix(seed ^ (0x6c62272e07bb0142ull * (trial + 1)));
        mix.next();
        return mix;
    }

  private:
    std::uint64_t state_;
};

} // namespace tcx

#endif
