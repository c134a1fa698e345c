#pragma once

// Time-frequency frame families.
//
// Gabor/STFT: the full system {M_b T_a g : a, b in Z_d} over Z_d x Z_d with
// measure weight 1/d per point. Its frame operator is exactly ||g||^2 I.
//
// Wavelets: a d-point periodic signal space on [0, 1) with integer
// frequencies gamma_k in [-d/2, d/2). Columns are built in the frequency
// domain as sqrt(a) psi_hat(a gamma_k) exp(-2 pi i b gamma_k) and brought to
// time with the unitary inverse DFT. Only positive scales are used, so the
// reproducing constant is the positive-axis one,
//   C_psi^+ = int_0^inf |psi_hat(gamma)|^2 / gamma d gamma.

#include <functional>
#include <optional>
#include <string>

#include "cframe/frame.hpp"

namespace cframe {

/// (T_a x)_t = x_{(t - a) mod d}
Vec translate(const Vec& x, long a);
/// (M_b x)_t = exp(2 pi i b t / d) x_t
Vec modulate(const Vec& x, long b);

struct WindowSpec {
    enum class Kind { gaussian, samples };
    Kind kind = Kind::gaussian;
    /// Gaussian width in samples; <= 0 means sqrt(d).
    double width = 0.0;
    Vec samples;

    static WindowSpec gaussian(double width = 0.0) { return {Kind::gaussian, width, {}}; }
    static WindowSpec given(Vec samples) { return {Kind::samples, 0.0, std::move(samples)}; }
};

/// Window samples on Z_d; periodized Gaussian exp(-pi (dist(t, 0) / width)^2)
/// or the given samples. Throws InvalidInput for a zero window.
Vec make_window(const WindowSpec& spec, std::size_t d);

/// Z_d x Z_d with points (a, b), a-major, every weight 1/d.
MeasureSpace gabor_space(std::size_t d);

/// Column a * d + b is M_b T_a g.
SampledFrame gabor_frame(const WindowSpec& window, std::size_t d);

/// Psi_g f (a, b) = <f, M_b T_a g>, computed directly on the Gabor space.
Symbol stft(const Vec& f, const WindowSpec& window);
Symbol stft(const Vec& f, const Vec& g);

/// | sum (1/d) Psi_{g1} f1 conj(Psi_{g2} f2) - <f1, f2> <g2, g1> |
double stft_orthogonality_residual(const Vec& f1, const Vec& f2, const Vec& g1, const Vec& g2);

struct WaveletSpec {
    enum class Kind { mexican_hat_fourier, given_fourier };
    Kind kind = Kind::mexican_hat_fourier;
    std::function<Complex(double)> profile;

    /// psi_hat(gamma) = gamma^2 exp(-gamma^2)
    static WaveletSpec mexican_hat();
    /// Throws InvalidInput unless |psi_hat(0)| <= 1e-12.
    static WaveletSpec given(std::function<Complex(double)> profile);

    Complex operator()(double gamma) const;
};

struct Admissibility {
    double c_psi = 0.0;       ///< both half-axes
    double c_psi_plus = 0.0;  ///< positive half-axis
    bool admissible = false;  ///< 0 < C_psi < inf
};

/// Quadrature of |psi_hat(gamma)|^2 / |gamma| over a grid of |gamma| values.
/// The grid is a quadrature for (0, inf); both signs of gamma are summed for
/// C_psi. Throws InvalidDomain if any grid point is <= 0.
Admissibility admissibility_constant(const WaveletSpec& psi, const MeasureSpace& freq_quadrature);

/// Log grid on [1e-4, 1e2] with 4000 cells.
MeasureSpace default_frequency_grid();

/// Signed DFT frequency of bin k on Z_d.
double dft_frequency(std::size_t k, std::size_t d);

/// Unitary DFT and inverse on C^d.
Vec dft(const Vec& x);
Vec idft(const Vec& x);

/// Frame over a wavelet_grid space. Throws InvalidInput for an
/// inadmissible wavelet.
SampledFrame wavelet_frame(const WaveletSpec& psi, const MeasureSpace& grid, std::size_t d);

/// sum_a (da / a) |psi_hat(a gamma)|^2 over the scale cells of the grid:
/// the diagonal of the wavelet frame operator in the frequency basis.
std::vector<double> scale_coverage(const WaveletSpec& psi, const MeasureSpace& grid, std::size_t d);

struct CalderonResult {
    double residual = 0.0;
    double c_psi_plus = 0.0;
    double band_low = 0.0;   ///< covered |gamma| range
    double band_high = 0.0;
    double energy_outside_band = 0.0;  ///< relative energy of f outside the band
    bool warning = false;              ///< f has energy outside the band
    std::string note;
};

/// Band: |gamma| whose scale coverage is within 1% of C_psi^+.
inline constexpr double kBandTolerance = 0.01;
/// Relative energy outside the band above which the result carries a warning.
inline constexpr double kBandEnergyWarning = 1e-6;

/// ||(1/C_psi^+) T_W T_W^* f - f|| / ||f||.
CalderonResult calderon_residual(const WaveletSpec& psi, const MeasureSpace& grid, const Vec& f);

/// Unit-norm signal whose spectrum is a Gaussian bump exp(-(|gamma| - center)^2 / (2 width^2)).
Vec spectral_bump(std::size_t d, double center, double width);

}  // namespace cframe
