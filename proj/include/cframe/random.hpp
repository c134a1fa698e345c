#pragma once

// Seeded generators for property suites. Every instance derives its own
// engine from (master seed, instance index), so results do not depend on
// evaluation order.

#include <cstdint>
#include <random>

#include "cframe/hilbert.hpp"
#include "cframe/measure.hpp"

namespace cframe {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for instance `index` of a run with master seed `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master) ^ (index + 0x9e3779b97f4a7c15ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }
    double normal() { return normal_(engine_); }
    /// Standard complex Gaussian (E|z|^2 = 1).
    Complex complex_normal();

    Vec vec(std::size_t d);
    Operator matrix(std::size_t rows, std::size_t cols);
    Operator hermitian(std::size_t d);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// N points, weights drawn from (0.1, 1) * 2/N (total mass near 1.1).
MeasureSpace random_space(Rng& rng, std::size_t n);

}  // namespace cframe
