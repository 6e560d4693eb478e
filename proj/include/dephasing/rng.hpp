// rng.hpp — Seedable, platform-portable random streams
//
// Sampling uses mt19937_64 seeded through splitmix64, with one engine per
// sample index. Raw engine bits are mapped to values directly (no standard
// library distributions, whose outputs vary between implementations), so
// seeded results are bit-for-bit reproducible everywhere and independent of
// how samples are scheduled across threads.

#pragma once

#include <cstdint>
#include <random>

namespace dephasing {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Engine for sample `index` of the stream identified by `seed`.
inline std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

// One unbiased bit per call.
class BitDrawer {
public:
    explicit BitDrawer(std::mt19937_64& eng) : eng_(eng) {}

    bool next() {
        if (left_ == 0) {
            word_ = eng_();
            left_ = 64;
        }
        const bool b = (word_ & 1u) != 0;
        word_ >>= 1;
        --left_;
        return b;
    }

private:
    std::mt19937_64& eng_;
    std::uint64_t word_ = 0;
    int left_ = 0;
};

}  // namespace dephasing
