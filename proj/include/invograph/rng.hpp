#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace invograph {

// Seeded generator with a fully specified output sequence. std::mt19937_64 is
// bit-exact across standard libraries; the bounded draw and the shuffle are
// written out here because the std distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (one value per call, no caching).
    double normal();

    // Poisson(mean): multiplication method below 30, rounded normal above.
    std::int64_t poisson(double mean);

    // Fisher-Yates, drawing from the back.
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// Independent per-trial seed from a base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace invograph
