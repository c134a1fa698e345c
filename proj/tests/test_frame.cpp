#include <doctest.h>

#include <cmath>

#include "cframe/errors.hpp"
#include "cframe/frame.hpp"
#include "cframe/random.hpp"

using namespace cframe;

namespace {

SampledFrame random_frame(Rng& rng, std::size_t d, std::size_t n) {
    return SampledFrame(random_space(rng, n), rng.matrix(d, n));
}

// sum_j w_j |<x, F_j>|^2 by explicit loops.
double energy(const SampledFrame& f, const Vec& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        Complex c{0.0, 0.0};
        for (std::size_t k = 0; k < f.dim(); ++k)
            c += x(static_cast<Eigen::Index>(k)) *
                 std::conj(f.vectors()(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)));
        s += f.space().weight(j) * std::norm(c);
    }
    return s;
}

}  // namespace

TEST_CASE("frame operator equals the quadratic form of the coefficient energy") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_frame(rng, rng.index(1, 6), rng.index(1, 20));
        const Operator s = frame_operator(f);
        for (int rep = 0; rep < 10; ++rep) {
            const Vec x = rng.vec(f.dim());
            CHECK(inner(s * x, x).real() == doctest::Approx(energy(f, x)).epsilon(1e-12));
        }
        CHECK((s - s.adjoint()).norm() <= 1e-14 * s.norm());
    }
}

TEST_CASE("synthesis is the adjoint of analysis in the weighted L2 pairing") {
    Rng rng(22);
    const auto f = random_frame(rng, 4, 12);
    const Vec x = rng.vec(4);
    std::vector<Complex> c(12);
    for (auto& v : c) v = rng.complex_normal();
    const auto ax = analysis(f, x);
    Complex lhs{0.0, 0.0};
    for (std::size_t j = 0; j < 12; ++j) lhs += f.space().weight(j) * c[j] * std::conj(ax[j]);
    CHECK(std::abs(inner(synthesis(f, c), x) - lhs) < 1e-12);
    CHECK_THROWS_AS(synthesis(f, std::vector<Complex>(3)), ShapeError);
    CHECK_THROWS_AS(analysis(f, rng.vec(5)), ShapeError);
}

TEST_CASE("frame bounds bracket sampled Rayleigh quotients") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_frame(rng, rng.index(1, 6), rng.index(12, 30));
        const auto b = frame_bounds(f);
        CHECK(b.is_frame);
        CHECK(b.A <= b.B);
        for (int rep = 0; rep < 20; ++rep) {
            const Vec x = rng.vec(f.dim());
            const double q = energy(f, x) / x.squaredNorm();
            CHECK(q >= b.A * (1.0 - 1e-12));
            CHECK(q <= b.B * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("a rank-deficient system is not a frame") {
    Operator v = Operator::Zero(3, 5);
    v.row(0).setOnes();
    const SampledFrame f(counting_space(5), v);
    const auto b = frame_bounds(f);
    CHECK(!b.is_frame);
    CHECK(b.A == 0.0);
    CHECK(b.B == doctest::Approx(5.0));
    CHECK_THROWS_AS(canonical_dual(f), NotAFrame);
}

TEST_CASE("canonical dual reconstructs and forms a dual pair") {
    Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_frame(rng, rng.index(1, 6), rng.index(12, 30));
        const auto g = canonical_dual(f);
        CHECK(is_dual_pair(f, g, 1e-10));
        CHECK(is_dual_pair(g, f, 1e-10));
        const Vec x = rng.vec(f.dim());
        CHECK((synthesis(g, analysis(f, x)) - x).norm() <= 1e-10 * x.norm());
        // Dual bounds are 1/B and 1/A.
        const auto bf = frame_bounds(f), bg = frame_bounds(g);
        CHECK(bg.A == doctest::Approx(1.0 / bf.B).epsilon(1e-9));
        CHECK(bg.B == doctest::Approx(1.0 / bf.A).epsilon(1e-9));
    }
}

TEST_CASE("a non-dual pair is rejected") {
    Rng rng(25);
    const auto f = random_frame(rng, 3, 10);
    CHECK(!is_dual_pair(f, f.scaled(3.0), 1e-10));
}

TEST_CASE("Riesz type means the analysis operator is onto") {
    Rng rng(26);
    CHECK_THROWS_AS(is_riesz_type(SampledFrame(counting_space(3), rng.matrix(4, 3))), NotAFrame);
    CHECK(is_riesz_type(SampledFrame(counting_space(4), rng.matrix(4, 4))));
    CHECK(!is_riesz_type(SampledFrame(counting_space(6), rng.matrix(4, 6))));
}

TEST_CASE("tight frame from a partition is Parseval") {
    Rng rng(27);
    for (std::size_t k = 1; k <= 6; ++k) {
        const auto space = random_space(rng, 10);
        const auto f = tight_from_partition(space, k);
        CHECK(f.dim() == k);
        CHECK(identity_residual(frame_operator(f)) < 1e-13);
    }
    CHECK_THROWS_AS(tight_from_partition(counting_space(3), 4), InfeasiblePartition);
}

TEST_CASE("two-branch profile values") {
    CHECK(unbounded_profile(0.0) == 0.0);
    CHECK(unbounded_profile(0.25) == doctest::Approx(2.0));
    CHECK(unbounded_profile(-0.25) == doctest::Approx(2.0));
    CHECK(unbounded_profile(2.0) == doctest::Approx(0.25));
    CHECK(unbounded_profile(1.0) == doctest::Approx(1.0));
}

TEST_CASE("norm-unbounded Bessel map on refining grids") {
    Rng rng(28);
    const Vec h = rng.vec(3);
    double previous = 0.0;
    for (std::size_t n : {100u, 1000u, 10000u}) {
        const auto space = uniform_grid_1d(0.0, 1.0, n);
        const auto f = scaled_singleton(space, h);
        // The smallest midpoint is 1/(2n), so sup ||a h|| = (2n)^{1/4} ||h||.
        CHECK(norm_bound(f) == doctest::Approx(std::pow(2.0 * n, 0.25) * h.norm()).epsilon(1e-12));
        CHECK(norm_bound(f) > previous);
        previous = norm_bound(f);
        // S_F = (sum_j w_j a_j^2) h h^*, and the sum stays below int_0^1 x^{-1/2} = 2.
        const double b = frame_bounds(f).B;
        CHECK(b <= 2.0 * h.squaredNorm());
        double quadrature = 0.0;
        for (std::size_t j = 0; j < n; ++j) quadrature += 1.0 / (static_cast<double>(n) * std::sqrt((j + 0.5) / n));
        CHECK(b == doctest::Approx(quadrature * h.squaredNorm()).epsilon(1e-12));
    }
    CHECK_THROWS_AS(scaled_singleton(uniform_grid_1d(0.0, 1.0, 4), Vec::Zero(2)), InvalidInput);
}

TEST_CASE("perturbed frame bounds") {
    Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const auto space = random_space(rng, 24);
        const SampledFrame g(space, rng.matrix(4, 24));
        const SampledFrame f(space, rng.matrix(4, 24));
        const auto bg = frame_bounds(g), bf = frame_bounds(f);
        const double eps = 0.5 * std::sqrt(bg.A / bf.B);
        const auto bp = frame_bounds(perturb(g, f, eps));
        CHECK(bp.A >= std::pow(std::sqrt(bg.A) - eps * std::sqrt(bf.B), 2) * (1.0 - 1e-12));
        CHECK(bp.B <= 2.0 * (bg.B + eps * eps * bf.B) * (1.0 + 1e-12));
        CHECK_THROWS_AS(perturb(g, f, 0.0), InvalidParameter);
    }
}

TEST_CASE("weighted frame operator") {
    Rng rng(30);
    const auto f = random_frame(rng, 3, 15);
    std::vector<double> m(15);
    for (auto& v : m) v = rng.uniform(0.0, 3.0);
    const Symbol sym = Symbol::real(f.space(), m);
    Operator direct = Operator::Zero(3, 3);
    for (std::size_t j = 0; j < 15; ++j) direct += f.space().weight(j) * m[j] * f.column(j) * f.column(j).adjoint();
    CHECK((frame_operator(weighted(f, sym)) - direct).norm() < 1e-12 * direct.norm());
    std::vector<double> negative(15, 1.0);
    negative[3] = -1.0;
    CHECK_THROWS_AS(weighted(f, Symbol::real(f.space(), negative)), InvalidSymbol);
}

TEST_CASE("counting measure: ||F_j||^2 <= B") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const SampledFrame f(counting_space(10), rng.matrix(3, 10));
        const double b = frame_bounds(f).B;
        for (std::size_t j = 0; j < 10; ++j) CHECK(f.column(j).squaredNorm() <= b * (1.0 + 1e-12));
    }
}

TEST_CASE("frames on different spaces are incompatible") {
    Rng rng(32);
    const SampledFrame a(counting_space(4), rng.matrix(2, 4));
    const SampledFrame b(uniform_grid_1d(0.0, 1.0, 4), rng.matrix(2, 4));
    CHECK_THROWS_AS(require_compatible(a, b, "test"), ShapeError);
    CHECK_THROWS_AS(SampledFrame(counting_space(4), rng.matrix(2, 3)), ShapeError);
}
