#pragma once

#include <cstdint>

namespace ekr {

// Stafford's mix13 finalizer (the splitmix64 output function). Full-avalanche
// bijection on 64 bits; all reproducible randomness in the project funnels
// through it.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Keyed hash of a (seed, a, b) triple.
constexpr std::uint64_t hash3(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (b + 0x9e3779b97f4a7c15ULL));
    return h;
}

// Top 53 bits as a uniform double in [0,1); never returns 1.0.
constexpr double unit_interval(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Independent sub-seed for trial t of a master seed (counter-based stream).
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t t) {
    return hash3(master, t, 0x5eedULL);
}

// Small counter-based generator for sampling; state advances splitmix-style.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform in [0, bound) without modulo bias (Lemire rejection); bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t t = (0 - bound) % bound;  // 2^64 mod bound
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    double next_unit() { return unit_interval(next()); }

  private:
    std::uint64_t state_;
};

}  // namespace ekr
