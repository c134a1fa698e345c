#include "cframe/random.hpp"

#include <cmath>

namespace cframe {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

Vec Rng::vec(std::size_t d) {
    Vec v(static_cast<Eigen::Index>(d));
    for (Eigen::Index t = 0; t < v.size(); ++t) v(t) = complex_normal();
    return v;
}

Operator Rng::matrix(std::size_t rows, std::size_t cols) {
    Operator m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    // Column-major fill keeps the draw order independent of Eigen's storage.
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = complex_normal();
    return m;
}

Operator Rng::hermitian(std::size_t d) {
    const Operator m = matrix(d, d);
    return 0.5 * (m + m.adjoint());
}

MeasureSpace random_space(Rng& rng, std::size_t n) {
    std::vector<std::vector<double>> points(n);
    std::vector<double> weights(n);
    const double scale = 2.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        points[j] = {static_cast<double>(j)};
        weights[j] = rng.uniform(0.1, 1.0) * scale;
    }
    return MeasureSpace(std::move(points), std::move(weights));
}

}  // namespace cframe
