#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cframe/errors.hpp"
#include "cframe/random.hpp"
#include "cframe/tf_frames.hpp"

using namespace cframe;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Psi_g f(a, b) = sum_t f_t conj(g_{t-a}) exp(-2 pi i b t / d), straight from the definition.
Complex stft_entry(const Vec& f, const Vec& g, long a, long b) {
    const long d = static_cast<long>(f.size());
    Complex s{0.0, 0.0};
    for (long t = 0; t < d; ++t) {
        const long shifted = ((t - a) % d + d) % d;
        s += f(t) * std::conj(g(shifted)) * std::polar(1.0, -kTwoPi * static_cast<double>(b * t) / static_cast<double>(d));
    }
    return s;
}

}  // namespace

TEST_CASE("translation and modulation on Z_d") {
    Rng rng(41);
    const Vec x = rng.vec(7);
    const Vec t = translate(x, 3);
    const Vec m = modulate(x, 2);
    for (long k = 0; k < 7; ++k) {
        CHECK(t(k) == x(((k - 3) % 7 + 7) % 7));
        CHECK(std::abs(m(k) - std::polar(1.0, kTwoPi * 2.0 * k / 7.0) * x(k)) < 1e-14);
    }
    CHECK((translate(x, -4) - translate(x, 3)).norm() == 0.0);
    CHECK((modulate(x, 9) - modulate(x, 2)).norm() < 1e-14);
}

TEST_CASE("gaussian window") {
    const Vec g = make_window(WindowSpec::gaussian(), 16);
    for (long t = 1; t < 16; ++t) CHECK(std::abs(g(t) - g(16 - t)) < 1e-15);
    CHECK(g(0).real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(make_window(WindowSpec::given(Vec::Zero(4)), 4), InvalidInput);
    CHECK_THROWS_AS(make_window(WindowSpec::given(Vec::Ones(3)), 4), ShapeError);
}

TEST_CASE("gabor systems are tight with bound ||g||^2") {
    Rng rng(42);
    for (std::size_t d : {1u, 2u, 5u, 8u, 16u}) {
        for (int w = 0; w < 5; ++w) {
            const WindowSpec spec = w == 0 ? WindowSpec::gaussian() : WindowSpec::given(rng.vec(d));
            const auto f = gabor_frame(spec, d);
            CHECK(f.size() == d * d);
            const double g2 = make_window(spec, d).squaredNorm();
            const auto b = frame_bounds(f);
            CHECK(std::abs(b.A - g2) <= 1e-10 * g2);
            CHECK(std::abs(b.B - g2) <= 1e-10 * g2);
        }
    }
    const auto space = gabor_space(4);
    CHECK(space.total_mass() == doctest::Approx(4.0));
}

TEST_CASE("stft against the defining sum") {
    Rng rng(43);
    for (std::size_t d : {1u, 3u, 8u}) {
        const Vec f = rng.vec(d), g = rng.vec(d);
        const Symbol s = stft(f, g);
        const auto frame_coeffs = analysis(gabor_frame(WindowSpec::given(g), d), f);
        for (long a = 0; a < static_cast<long>(d); ++a)
            for (long b = 0; b < static_cast<long>(d); ++b) {
                const auto j = static_cast<std::size_t>(a) * d + static_cast<std::size_t>(b);
                CHECK(std::abs(s[j] - stft_entry(f, g, a, b)) < 1e-12);
                CHECK(std::abs(s[j] - frame_coeffs[j]) < 1e-12);
            }
    }
    CHECK_THROWS_AS(stft(rng.vec(3), rng.vec(4)), ShapeError);
}

TEST_CASE("stft orthogonality relation") {
    Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = rng.index(1, 12);
        CHECK(stft_orthogonality_residual(rng.vec(d), rng.vec(d), rng.vec(d), rng.vec(d)) <= 1e-10);
    }
}

TEST_CASE("unitary DFT") {
    Rng rng(45);
    for (std::size_t d : {1u, 6u, 16u}) {
        const Vec x = rng.vec(d);
        const Vec y = dft(x);
        for (std::size_t k = 0; k < d; ++k) {
            Complex s{0.0, 0.0};
            for (std::size_t t = 0; t < d; ++t)
                s += x(static_cast<Eigen::Index>(t)) * std::polar(1.0, -kTwoPi * static_cast<double>(k * t) / static_cast<double>(d));
            CHECK(std::abs(y(static_cast<Eigen::Index>(k)) - s / std::sqrt(static_cast<double>(d))) < 1e-12);
        }
        CHECK(y.norm() == doctest::Approx(x.norm()).epsilon(1e-13));
        CHECK((idft(y) - x).norm() < 1e-13 * x.norm());
    }
    CHECK(dft_frequency(0, 8) == 0.0);
    CHECK(dft_frequency(3, 8) == 3.0);
    CHECK(dft_frequency(4, 8) == -4.0);
    CHECK(dft_frequency(7, 8) == -1.0);
}

TEST_CASE("admissibility constants against closed forms") {
    // gamma^2 exp(-gamma^2): int_0^inf gamma^3 exp(-2 gamma^2) = 1/8 per half-axis.
    const auto mh = admissibility_constant(WaveletSpec::mexican_hat(), log_grid_1d(1e-3, 10.0, 2000));
    CHECK(std::abs(mh.c_psi - 0.25) <= 1e-4);
    CHECK(mh.c_psi_plus == doctest::Approx(mh.c_psi / 2.0));
    CHECK(mh.admissible);
    // gamma exp(-gamma^2 / 2): int_0^inf gamma exp(-gamma^2) = 1/2 per half-axis.
    const auto first = WaveletSpec::given([](double g) { return Complex{g * std::exp(-g * g / 2.0), 0.0}; });
    CHECK(std::abs(admissibility_constant(first, default_frequency_grid()).c_psi - 1.0) <= 1e-6);
    const auto zero = WaveletSpec::given([](double) { return Complex{}; });
    CHECK(!admissibility_constant(zero, default_frequency_grid()).admissible);
    CHECK_THROWS_AS(WaveletSpec::given([](double) { return Complex{1.0, 0.0}; }), InvalidInput);
    CHECK_THROWS_AS(admissibility_constant(WaveletSpec::mexican_hat(), uniform_grid_1d(-1.0, 1.0, 4)), InvalidDomain);
}

TEST_CASE("wavelet frame operator is diagonal in frequency") {
    const std::size_t d = 32;
    const auto psi = WaveletSpec::mexican_hat();
    const auto grid = wavelet_grid(1.0 / 16.0, 2.0, 20, 0.0, 1.0, d);
    const auto frame = wavelet_frame(psi, grid, d);
    CHECK(frame.size() == 20 * d);
    Operator fourier(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k)
        fourier.col(static_cast<Eigen::Index>(k)) = dft(Vec::Unit(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k)));
    const Operator s = fourier * frame_operator(frame) * fourier.adjoint();
    const auto cover = scale_coverage(psi, grid, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
            const Complex expected = k == l ? Complex{cover[k], 0.0} : Complex{};
            CHECK(std::abs(s(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) - expected) < 1e-10);
        }
    CHECK_THROWS_AS(wavelet_frame(WaveletSpec::given([](double) { return Complex{}; }), grid, d), InvalidInput);
}

TEST_CASE("scale coverage approaches C_psi^+ in the mid band") {
    const std::size_t d = 512;
    const auto psi = WaveletSpec::mexican_hat();
    const auto grid = wavelet_grid(1.0 / 64.0, 4.0, 64, 0.0, 1.0, 1);
    const auto cover = scale_coverage(psi, grid, d);
    const double c_plus = 0.125;
    // The per-frequency oracle: a fine midpoint rule of int |psi_hat(a gamma)|^2 da / a over the same scale range.
    for (std::size_t k : {2u, 4u, 8u, 12u}) {
        const double gamma = dft_frequency(k, d);
        double fine = 0.0;
        const std::size_t n = 200000;
        const double lo = std::log(1.0 / 64.0), hi = std::log(4.0), h = (hi - lo) / n;
        for (std::size_t i = 0; i < n; ++i) {
            const double a = std::exp(lo + (i + 0.5) * h);
            fine += h * std::norm(psi(a * gamma));
        }
        CHECK(std::abs(cover[k] - fine) <= 1e-3 * fine);
        CHECK(std::abs(cover[k] - c_plus) <= 0.02 * c_plus);
    }
    // Zero frequency is never covered.
    CHECK(cover[0] == 0.0);
}

TEST_CASE("Calderon residual on a mid-band bump") {
    const std::size_t d = 256;
    const auto psi = WaveletSpec::mexican_hat();
    const Vec f = spectral_bump(d, 6.0, 1.2);
    CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-13));
    const auto r = calderon_residual(psi, wavelet_grid(1.0 / 64.0, 4.0, 64, 0.0, 1.0, d), f);
    CHECK(r.residual <= 0.02);
    CHECK(!r.warning);
    CHECK(r.band_low <= 6.0);
    CHECK(r.band_high >= 6.0);
    CHECK(r.c_psi_plus == doctest::Approx(0.125).epsilon(1e-6));

    // Streaming agrees with the materialized frame.
    const auto grid = wavelet_grid(1.0 / 16.0, 4.0, 16, 0.0, 1.0, 64);
    const Vec g = spectral_bump(64, 3.0, 1.0);
    const auto frame = wavelet_frame(psi, grid, 64);
    const Vec sg = frame_operator(frame) * g / r.c_psi_plus;
    CHECK(calderon_residual(psi, grid, g).residual == doctest::Approx((sg - g).norm()).epsilon(1e-9));
}

TEST_CASE("Calderon warns when the signal leaves the band") {
    const auto psi = WaveletSpec::mexican_hat();
    const Vec f = spectral_bump(256, 100.0, 3.0);
    const auto r = calderon_residual(psi, wavelet_grid(1.0 / 64.0, 4.0, 32, 0.0, 1.0, 256), f);
    CHECK(r.warning);
    CHECK(r.energy_outside_band > 0.5);
    CHECK(!r.note.empty());
}
