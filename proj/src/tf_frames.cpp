#include "cframe/tf_frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "cframe/errors.hpp"

namespace cframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t wrap(long v, std::size_t d) {
    const long n = static_cast<long>(d);
    long r = v % n;
    if (r < 0) r += n;
    return static_cast<std::size_t>(r);
}

/// exp(sign * 2 pi i m / d) for m = 0..d-1; reducing the exponent mod d first
/// keeps large products b * t exact.
std::vector<Complex> unit_roots(std::size_t d, double sign) {
    std::vector<Complex> roots(d);
    for (std::size_t m = 0; m < d; ++m) {
        const double angle = sign * kTwoPi * static_cast<double>(m) / static_cast<double>(d);
        roots[m] = {std::cos(angle), std::sin(angle)};
    }
    return roots;
}

}  // namespace

Vec translate(const Vec& x, long a) {
    const auto d = static_cast<std::size_t>(x.size());
    Vec out(x.size());
    if (d == 0) return out;
    for (std::size_t t = 0; t < d; ++t)
        out(static_cast<Eigen::Index>(t)) = x(static_cast<Eigen::Index>(wrap(static_cast<long>(t) - a, d)));
    return out;
}

Vec modulate(const Vec& x, long b) {
    const auto d = static_cast<std::size_t>(x.size());
    Vec out(x.size());
    if (d == 0) return out;
    const auto roots = unit_roots(d, 1.0);
    const std::size_t bb = wrap(b, d);
    for (std::size_t t = 0; t < d; ++t)
        out(static_cast<Eigen::Index>(t)) = roots[(bb * t) % d] * x(static_cast<Eigen::Index>(t));
    return out;
}

Vec make_window(const WindowSpec& spec, std::size_t d) {
    if (d == 0) throw InvalidParameter("window dimension must be >= 1");
    Vec g;
    if (spec.kind == WindowSpec::Kind::samples) {
        if (static_cast<std::size_t>(spec.samples.size()) != d)
            throw ShapeError("window has " + std::to_string(spec.samples.size()) + " samples, expected " +
                             std::to_string(d));
        g = spec.samples;
    } else {
        const double width = spec.width > 0.0 ? spec.width : std::sqrt(static_cast<double>(d));
        g.resize(static_cast<Eigen::Index>(d));
        for (std::size_t t = 0; t < d; ++t) {
            const double dist = static_cast<double>(std::min(t, d - t));
            g(static_cast<Eigen::Index>(t)) = std::exp(-std::numbers::pi * (dist / width) * (dist / width));
        }
    }
    if (!g.allFinite()) throw InvalidInput("window has non-finite samples");
    if (g.norm() == 0.0) throw InvalidInput("window must be nonzero");
    return g;
}

MeasureSpace gabor_space(std::size_t d) {
    if (d == 0) throw InvalidDomain("gabor_space requires d >= 1");
    std::vector<std::vector<double>> points;
    points.reserve(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) points.push_back({static_cast<double>(a), static_cast<double>(b)});
    return MeasureSpace(std::move(points), std::vector<double>(d * d, 1.0 / static_cast<double>(d)));
}

SampledFrame gabor_frame(const WindowSpec& window, std::size_t d) {
    const Vec g = make_window(window, d);
    const auto n = static_cast<Eigen::Index>(d);
    Operator cols(n, n * n);
    for (std::size_t a = 0; a < d; ++a) {
        const Vec shifted = translate(g, static_cast<long>(a));
        for (std::size_t b = 0; b < d; ++b)
            cols.col(static_cast<Eigen::Index>(a * d + b)) = modulate(shifted, static_cast<long>(b));
    }
    return SampledFrame(gabor_space(d), std::move(cols));
}

Symbol stft(const Vec& f, const Vec& g) {
    if (f.size() != g.size()) throw ShapeError("stft: signal and window dimensions differ");
    const auto d = static_cast<std::size_t>(f.size());
    if (d == 0) throw ShapeError("stft: empty signal");
    const auto roots = unit_roots(d, -1.0);
    std::vector<Complex> values(d * d);
    std::vector<Complex> product(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t t = 0; t < d; ++t)
            product[t] = f(static_cast<Eigen::Index>(t)) *
                         std::conj(g(static_cast<Eigen::Index>(wrap(static_cast<long>(t) - static_cast<long>(a), d))));
        for (std::size_t b = 0; b < d; ++b) {
            Complex acc{0.0, 0.0};
            for (std::size_t t = 0; t < d; ++t) acc += product[t] * roots[(b * t) % d];
            values[a * d + b] = acc;
        }
    }
    return Symbol(gabor_space(d), std::move(values));
}

Symbol stft(const Vec& f, const WindowSpec& window) {
    return stft(f, make_window(window, static_cast<std::size_t>(f.size())));
}

double stft_orthogonality_residual(const Vec& f1, const Vec& f2, const Vec& g1, const Vec& g2) {
    const auto d = f1.size();
    if (f2.size() != d || g1.size() != d || g2.size() != d)
        throw ShapeError("stft_orthogonality_residual: dimensions differ");
    const Symbol s1 = stft(f1, g1);
    const Symbol s2 = stft(f2, g2);
    Complex lhs{0.0, 0.0};
    const double w = 1.0 / static_cast<double>(d);
    for (std::size_t j = 0; j < s1.size(); ++j) lhs += w * s1[j] * std::conj(s2[j]);
    return std::abs(lhs - inner(f1, f2) * inner(g2, g1));
}

WaveletSpec WaveletSpec::mexican_hat() {
    return {Kind::mexican_hat_fourier, [](double g) { return Complex{g * g * std::exp(-g * g), 0.0}; }};
}

WaveletSpec WaveletSpec::given(std::function<Complex(double)> profile) {
    if (!profile) throw InvalidInput("wavelet profile is empty");
    if (std::abs(profile(0.0)) > 1e-12) throw InvalidInput("wavelet profile must vanish at zero frequency");
    return {Kind::given_fourier, std::move(profile)};
}

Complex WaveletSpec::operator()(double gamma) const { return profile(gamma); }

Admissibility admissibility_constant(const WaveletSpec& psi, const MeasureSpace& freq_quadrature) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t j = 0; j < freq_quadrature.size(); ++j) {
        const auto& p = freq_quadrature.points()[j];
        if (p.size() != 1) throw InvalidDomain("admissibility_constant: frequency grid must be one-dimensional");
        const double g = p[0];
        if (!(g > 0.0)) throw InvalidDomain("admissibility_constant: frequency grid must avoid gamma <= 0");
        const double w = freq_quadrature.weight(j) / g;
        plus += w * std::norm(psi(g));
        minus += w * std::norm(psi(-g));
    }
    Admissibility out;
    out.c_psi_plus = plus;
    out.c_psi = plus + minus;
    out.admissible = std::isfinite(out.c_psi) && out.c_psi > 0.0;
    return out;
}

MeasureSpace default_frequency_grid() { return log_grid_1d(1e-4, 1e2, 4000); }

double dft_frequency(std::size_t k, std::size_t d) {
    return k < (d + 1) / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(d);
}

namespace {

std::vector<Complex> to_std(const Vec& x) { return {x.data(), x.data() + x.size()}; }

Vec from_std(const std::vector<Complex>& x) {
    return Eigen::Map<const Vec>(x.data(), static_cast<Eigen::Index>(x.size()));
}

// kissfft does not handle length 1, where both transforms are the identity.
void fft_forward(Eigen::FFT<double>& fft, std::vector<Complex>& out, const std::vector<Complex>& in) {
    if (in.size() == 1)
        out = in;
    else
        fft.fwd(out, in);
}

void fft_inverse(Eigen::FFT<double>& fft, std::vector<Complex>& out, const std::vector<Complex>& in) {
    if (in.size() == 1)
        out = in;
    else
        fft.inv(out, in);
}

void require_signal_dim(std::size_t d) {
    if (d == 0) throw InvalidParameter("signal dimension must be >= 1");
}

/// Frequency-domain column sqrt(a) psi_hat(a gamma_k) exp(-2 pi i b gamma_k).
Vec wavelet_spectrum(const WaveletSpec& psi, double a, double b, std::size_t d) {
    Vec spec(static_cast<Eigen::Index>(d));
    const double root_a = std::sqrt(a);
    for (std::size_t k = 0; k < d; ++k) {
        const double g = dft_frequency(k, d);
        const double angle = -kTwoPi * b * g;
        spec(static_cast<Eigen::Index>(k)) = root_a * psi(a * g) * Complex{std::cos(angle), std::sin(angle)};
    }
    return spec;
}

struct ScaleBlock {
    std::size_t begin;
    std::size_t end;
};

/// Runs of consecutive points sharing the same scale coordinate.
std::vector<ScaleBlock> scale_blocks(const MeasureSpace& grid) {
    std::vector<ScaleBlock> blocks;
    const auto& pts = grid.points();
    std::size_t start = 0;
    for (std::size_t j = 1; j <= pts.size(); ++j) {
        if (j == pts.size() || pts[j][0] != pts[start][0]) {
            blocks.push_back({start, j});
            start = j;
        }
    }
    return blocks;
}

void require_wavelet_grid(const MeasureSpace& grid) {
    for (const auto& p : grid.points()) {
        if (p.size() != 2) throw InvalidDomain("wavelet grid points must be (a, b) pairs");
        if (!(p[0] > 0.0)) throw InvalidDomain("wavelet grid scales must be positive");
    }
}

void require_admissible(const WaveletSpec& psi) {
    if (!psi.profile) throw InvalidInput("wavelet profile is empty");
    if (!admissibility_constant(psi, default_frequency_grid()).admissible)
        throw InvalidInput("wavelet is not admissible (C_psi = 0 or infinite)");
}

/// Time-domain columns for grid points [begin, end).
Operator wavelet_block(const WaveletSpec& psi, const MeasureSpace& grid, ScaleBlock block, std::size_t d,
                       Eigen::FFT<double>& fft) {
    const auto& pts = grid.points();
    Operator cols(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(block.end - block.begin));
    std::vector<Complex> time(d);
    const double root_d = std::sqrt(static_cast<double>(d));
    for (std::size_t j = block.begin; j < block.end; ++j) {
        const auto spec = to_std(wavelet_spectrum(psi, pts[j][0], pts[j][1], d));
        fft_inverse(fft, time, spec);
        cols.col(static_cast<Eigen::Index>(j - block.begin)) = root_d * from_std(time);
    }
    return cols;
}

}  // namespace

Vec dft(const Vec& x) {
    require_signal_dim(static_cast<std::size_t>(x.size()));
    Eigen::FFT<double> fft;
    std::vector<Complex> out;
    fft_forward(fft, out, to_std(x));
    return from_std(out) / std::sqrt(static_cast<double>(x.size()));
}

Vec idft(const Vec& x) {
    require_signal_dim(static_cast<std::size_t>(x.size()));
    Eigen::FFT<double> fft;
    std::vector<Complex> out;
    fft_inverse(fft, out, to_std(x));
    return from_std(out) * std::sqrt(static_cast<double>(x.size()));
}

SampledFrame wavelet_frame(const WaveletSpec& psi, const MeasureSpace& grid, std::size_t d) {
    require_signal_dim(d);
    require_admissible(psi);
    require_wavelet_grid(grid);
    Operator cols(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(grid.size()));
    Eigen::FFT<double> fft;
    for (const auto& block : scale_blocks(grid))
        cols.middleCols(static_cast<Eigen::Index>(block.begin), static_cast<Eigen::Index>(block.end - block.begin)) =
            wavelet_block(psi, grid, block, d, fft);
    return SampledFrame(grid, std::move(cols));
}

std::vector<double> scale_coverage(const WaveletSpec& psi, const MeasureSpace& grid, std::size_t d) {
    require_signal_dim(d);
    require_wavelet_grid(grid);
    std::vector<double> cover(d, 0.0);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double a = grid.points()[j][0];
        const double w = grid.weight(j) * a;
        for (std::size_t k = 0; k < d; ++k) cover[k] += w * std::norm(psi(a * dft_frequency(k, d)));
    }
    return cover;
}

CalderonResult calderon_residual(const WaveletSpec& psi, const MeasureSpace& grid, const Vec& f) {
    const auto d = static_cast<std::size_t>(f.size());
    require_signal_dim(d);
    require_admissible(psi);
    require_wavelet_grid(grid);

    CalderonResult out;
    out.c_psi_plus = admissibility_constant(psi, default_frequency_grid()).c_psi_plus;

    // Band and out-of-band energy of f.
    const auto cover = scale_coverage(psi, grid, d);
    const Vec spectrum = dft(f);
    const double energy = f.squaredNorm();
    double outside = 0.0;
    out.band_low = kInfinity;
    out.band_high = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double g = std::abs(dft_frequency(k, d));
        const bool covered = std::abs(cover[k] / out.c_psi_plus - 1.0) <= kBandTolerance;
        if (covered) {
            out.band_low = std::min(out.band_low, g);
            out.band_high = std::max(out.band_high, g);
        } else {
            outside += std::norm(spectrum(static_cast<Eigen::Index>(k)));
        }
    }
    if (out.band_high == 0.0 && std::isinf(out.band_low)) out.band_low = 0.0;
    if (energy == 0.0) {
        out.residual = 0.0;
        return out;
    }
    out.energy_outside_band = outside / energy;
    if (out.energy_outside_band > kBandEnergyWarning) {
        out.warning = true;
        out.note = "signal has energy at frequencies the scale grid does not cover";
    }

    // T_W T_W^* f, accumulated one scale at a time.
    Vec recon = Vec::Zero(f.size());
    Eigen::FFT<double> fft;
    const auto& w = grid.weights();
    for (const auto& block : scale_blocks(grid)) {
        const Operator cols = wavelet_block(psi, grid, block, d, fft);
        Vec coeffs = cols.adjoint() * f;
        for (std::size_t j = block.begin; j < block.end; ++j)
            coeffs(static_cast<Eigen::Index>(j - block.begin)) *= w[j];
        recon += cols * coeffs;
    }
    out.residual = (recon / out.c_psi_plus - f).norm() / std::sqrt(energy);
    return out;
}

Vec spectral_bump(std::size_t d, double center, double width) {
    require_signal_dim(d);
    if (!(width > 0.0)) throw InvalidParameter("spectral_bump: width must be positive");
    Vec spec(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) {
        const double g = std::abs(dft_frequency(k, d));
        spec(static_cast<Eigen::Index>(k)) = std::exp(-(g - center) * (g - center) / (2.0 * width * width));
    }
    if (spec.norm() == 0.0) throw InvalidParameter("spectral_bump: bump has no energy on the grid");
    Vec x = idft(spec);
    return x / x.norm();
}

}  // namespace cframe
