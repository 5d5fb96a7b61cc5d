#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace netimmune {

/// Deterministic random source. mt19937_64 output is pinned by the C++
/// standard, and all derived draws below avoid std::*_distribution (whose
/// algorithms are implementation-defined), so identical seeds reproduce
/// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
    std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform_u64: empty range");
        const std::uint64_t span = hi - lo;
        if (span == UINT64_MAX) return engine_();
        const std::uint64_t bound = span + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + x % bound;
    }

    int uniform_int(int lo, int hi) {
        return static_cast<int>(uniform_u64(static_cast<std::uint64_t>(lo),
                                            static_cast<std::uint64_t>(hi)) );
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Fisher-Yates shuffle of the first `prefix` positions (or all when
    /// prefix < 0); used for sampling without replacement.
    template <typename T>
    void partial_shuffle(std::vector<T>& v, std::int64_t prefix = -1) {
        const std::size_t n = v.size();
        const std::size_t stop = prefix < 0 ? n : std::min<std::size_t>(prefix, n);
        for (std::size_t i = 0; i < stop && i + 1 < n; ++i) {
            const std::size_t j = static_cast<std::size_t>(uniform_u64(i, n - 1));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace netimmune
