#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace stowage {

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard,
// but the std distributions are not, so bounded draws are done here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t reject_above = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= reject_above);
        return lo + static_cast<std::int64_t>(x % range);
    }

    // Uniform index in [0, size).
    std::size_t index(std::size_t size) {
        if (size <= 1) return 0;
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(size) - 1));
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double unit_real() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool coin(double p) { return unit_real() < p; }

    // Fisher-Yates; std::shuffle is not reproducible across implementations.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

// Stateless mix for deriving independent child seeds (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace stowage
