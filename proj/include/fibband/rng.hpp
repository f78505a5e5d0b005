#pragma once

#include <cstdint>

namespace fibband {

/// splitmix64. Tiny and identical on every platform, so a fuzz run is
/// reproducible from its seed alone.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Draw from [lo, hi] by modulo. The bias is irrelevant for the tiny
    /// spans used here; platform-stable output is what matters.
    long range(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

  private:
    std::uint64_t state_;
};

}  // namespace fibband
