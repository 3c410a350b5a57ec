#pragma once

#include <cstdint>
#include <initializer_list>

namespace polarga {

// Project-wide deterministic RNG: counter-friendly splitmix64 streams with a
// Box-Muller Gaussian on top. Every simulation seed is derived by hashing
// (master_seed, stream ids...) so parallel workers never share state and
// results are independent of the thread count.

inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Order-sensitive combination of seed words into one 64-bit stream seed.
inline uint64_t seed_hash(std::initializer_list<uint64_t> words) {
    uint64_t h = 0x8badf00d5eed1234ull;
    for (uint64_t w : words) h = mix64(h ^ mix64(w));
    return h;
}

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    uint64_t state_;
};

// One random stream = one frame / one worker. Draw order is part of the
// reproducibility contract: callers must consume values in a fixed pattern.
class RandomStream {
  public:
    explicit RandomStream(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_.next(); }

    // Single fair bit; buffers one 64-bit word per 64 calls.
    int bit() {
        if (bits_left_ == 0) {
            bit_buffer_ = gen_.next();
            bits_left_ = 64;
        }
        int b = static_cast<int>(bit_buffer_ & 1u);
        bit_buffer_ >>= 1;
        --bits_left_;
        return b;
    }

    // Uniform double in (0, 1]; safe under log().
    double uniform01() {
        return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; caches the paired variate.
    double gaussian();

  private:
    SplitMix64 gen_;
    uint64_t bit_buffer_ = 0;
    int bits_left_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace polarga
