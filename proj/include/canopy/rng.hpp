#pragma once

#include <cstdint>

namespace canopy {

// Stream derivation contract: trial i of a run with seed s draws from
// Stream(derive_stream(s, i)). splitmix64 is the fixed mixing function, so
// results are identical across platforms and independent of scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = index + 0x632BE59BD9B4E019ULL;
    std::uint64_t b = splitmix64(t);
    std::uint64_t c = a ^ b;
    return splitmix64(c);
}

class Stream {
  public:
    explicit Stream(std::uint64_t state) : state_(state) {}

    std::uint64_t next() { return splitmix64(state_); }

    /// Unbiased draw in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    bool coin() { return (next() & 1ULL) != 0; }

  private:
    std::uint64_t state_;
};

}  // namespace canopy
