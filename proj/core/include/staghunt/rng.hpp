#pragma once

#include <cstdint>

namespace staghunt {

// Splittable counter-mixed PRNG (xoshiro256++ seeded via splitmix64).
// Deterministic for a given 64-bit seed on every platform, so experiment
// outputs are bit-reproducible from the seed recorded in their metadata.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound), bound > 0; unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool(double p) { return next_double() < p; }

    // Independent stream derived from this generator's seed material and a
    // stream index; used to fan experiments out over seeds deterministically.
    Rng split(std::uint64_t stream) const {
        std::uint64_t x = state_[0] ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        return Rng(splitmix64(x));
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace staghunt
