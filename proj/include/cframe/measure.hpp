#pragma once

// Finite weighted point sets standing in for a measure space (Omega, mu).
// Every integral over Omega is a weighted sum over the points.

#include <complex>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace cframe {

using Complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Immutable finite measure space. Copies share storage; identity of the
/// shared storage is the space's identity token.
class MeasureSpace {
public:
    /// Validates: N >= 1, equal lengths, every weight finite and > 0,
    /// every coordinate finite.
    MeasureSpace(std::vector<std::vector<double>> points, std::vector<double> weights);

    std::size_t size() const noexcept { return data_->weights.size(); }
    const std::vector<std::vector<double>>& points() const noexcept { return data_->points; }
    const std::vector<double>& weights() const noexcept { return data_->weights; }
    double weight(std::size_t j) const { return data_->weights.at(j); }
    double total_mass() const noexcept { return data_->total_mass; }

    /// Opaque token; equal for copies of the same constructed space.
    const void* id() const noexcept { return data_.get(); }

    /// Same token, or identical points and weights.
    bool same_as(const MeasureSpace& other) const noexcept;

private:
    struct Data {
        std::vector<std::vector<double>> points;
        std::vector<double> weights;
        double total_mass = 0.0;
    };
    std::shared_ptr<const Data> data_;
};

/// Complex function sampled on the points of a MeasureSpace.
class Symbol {
public:
    Symbol(MeasureSpace space, std::vector<Complex> values);

    /// Constant symbol.
    static Symbol constant(const MeasureSpace& space, Complex value);
    /// Real-valued symbol.
    static Symbol real(const MeasureSpace& space, std::span<const double> values);

    const MeasureSpace& space() const noexcept { return space_; }
    const std::vector<Complex>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    Complex operator[](std::size_t j) const { return values_[j]; }

    Symbol conj() const;
    Symbol operator-(const Symbol& rhs) const;
    Symbol operator+(const Symbol& rhs) const;
    Symbol operator*(Complex scale) const;

private:
    MeasureSpace space_;
    std::vector<Complex> values_;
};

/// Midpoint rule on [a, b] with n cells.
MeasureSpace uniform_grid_1d(double a, double b, std::size_t n);

/// Log-uniform cells on [a, b] (0 < a < b) sampled at geometric midpoints,
/// weight = linear cell width. Used for frequency-axis quadrature.
MeasureSpace log_grid_1d(double a, double b, std::size_t n);

/// Tensor midpoint grid, x-major ordering.
MeasureSpace product_grid_2d(double ax, double bx, std::size_t nx,
                             double ay, double by, std::size_t ny);

/// Half-plane a > 0 with measure da db / a^2: log-uniform scale cells at
/// geometric midpoints times a midpoint shift grid. Points are (a, b),
/// scale-major.
MeasureSpace wavelet_grid(double a_min, double a_max, std::size_t n_a,
                          double b_min, double b_max, std::size_t n_b);

/// Counting measure on {0, ..., n-1}.
MeasureSpace counting_space(std::size_t n);

Complex integrate(const MeasureSpace& space, std::span<const Complex> samples);

/// Weighted L^p norm of a symbol; p = kInfinity gives max |m_j|.
double lp_norm(const Symbol& m, double p);

/// Contiguous blocks of near-equal cardinality (larger blocks first).
std::vector<std::vector<std::size_t>> partition(const MeasureSpace& space, std::size_t k);

}  // namespace cframe
