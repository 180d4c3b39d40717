#pragma once

#include <cstdint>
#include <random>

namespace strongcolor {

// Deterministic source of randomness. Thin wrapper over std::mt19937_64 with
// fixed draw conventions, so that a (seed, call sequence) pair produces the
// same values on every platform. The std::*_distribution adaptors are
// deliberately avoided because their output is implementation defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n), unbiased via rejection. n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [0, 1) with 53 random bits.
    double real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real() < p; }

    bool coin() { return (eng_() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seed for the i-th derived stream of a master seed. Used wherever a run
// spawns independent sub-experiments (retries, Monte Carlo trials) so that
// the whole run is reproducible from the master seed alone.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream + 0x51ed2701));
}

} // namespace strongcolor
