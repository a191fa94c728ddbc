#ifndef BMP_RNG_HPP
#define BMP_RNG_HPP

#include <cstdint>

namespace bmp {

// splitmix64 (Steele/Lea/Flood/Vigna). Fixed here so that seeded graph
// generation reproduces bit-for-bit across platforms and implementations.
// Update rule, per draw:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

} // namespace bmp

#endif
