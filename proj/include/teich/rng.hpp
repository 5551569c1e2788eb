#pragma once

#include <cstdint>

namespace teich {

// Counter-based splitmix64: sample i of a stream is a pure function of
// (seed, i), so a sample sequence can be partitioned across workers in any
// way without changing a single bit of the output.
//
// Constants are the standard splitmix64 ones (Steele/Lea/Flood mix with the
// golden-ratio increment).
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01_at(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

// Small sequential helper for test-input generation.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return splitmix64_at(seed_, counter_++); }
    double next_u01() { return uniform01_at(seed_, counter_++); }
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_u01(); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace teich
