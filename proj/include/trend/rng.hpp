#pragma once

#include <cmath>
#include <cstdint>

namespace trend {

// All randomness in the library goes through this header. The generators are
// fixed, well-known algorithms implemented here (not std:: distributions,
// whose output is implementation-defined) so that a seed produces the same
// byte-identical results on every platform, thread count, and run.

// One splitmix64 scramble step.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic seed derivation: mixes a stream tag into a master seed.
// Used to give every (window, direction, replicate) its own independent
// stream, so results never depend on scheduling or evaluation order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
    return splitmix64(master ^ (0x9E3779B97F4A7C15ULL * (tag + 1)));
}
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b, std::uint64_t c) {
    return derive_seed(derive_seed(master, a, b), c);
}

// xoshiro256++ (Blackman & Vigna, public domain reference implementation),
// state-seeded from splitmix64 per the authors' recommendation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
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

    // Uniform on [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform index in [0, n) by 128-bit multiply-shift; bias < n / 2^64.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Standard Box-Muller; consumes exactly two uniforms per call.
    double normal(double mean, double stddev) {
        double u1 = next_double();
        const double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * radius * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Geometric draw with continuation probability theta: number of
    // successes before the first failure, P(k) = (1-theta) theta^k.
    // Inversion: floor(log u / log theta) with u uniform on (0, 1].
    std::uint64_t geometric(double theta) {
        const double u = 1.0 - next_double();
        const double k = std::floor(std::log(u) / std::log(theta));
        return k < 0.0 ? 0 : static_cast<std::uint64_t>(k);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

} // namespace trend
