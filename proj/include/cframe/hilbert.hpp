#pragma once

// The finite-dimensional Hilbert space C^d: vectors, dense operators and
// their spectral utilities.

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cframe/measure.hpp"

namespace cframe {

using Vec = Eigen::VectorXcd;
/// Dense d x d operator; row index is the output coordinate.
using Operator = Eigen::MatrixXcd;

/// Singular values, nonincreasing.
struct SchattenSpectrum {
    std::vector<double> singular_values;

    double largest() const { return singular_values.empty() ? 0.0 : singular_values.front(); }
    double smallest() const { return singular_values.empty() ? 0.0 : singular_values.back(); }
};

struct HermitianBounds {
    double lambda_min;
    double lambda_max;
};

/// <x, y>: linear in x, conjugate-linear in y.
Complex inner(const Vec& x, const Vec& y);

Operator adjoint(const Operator& t);

/// Throws NumericFailure when the decomposition yields non-finite values.
SchattenSpectrum singular_values(const Operator& t);

/// (sum s_n^p)^(1/p); p = kInfinity gives the operator norm.
double schatten_norm(const Operator& t, double p);
double schatten_norm(const SchattenSpectrum& s, double p);

/// Operator norm (largest singular value).
double op_norm(const Operator& t);

/// Extreme eigenvalues of a Hermitian operator. Hermiticity is checked to
/// 1e-10 * ||T|| (ContractViolation otherwise).
HermitianBounds hermitian_bounds(const Operator& t);

/// Hermitian to tol and lambda_min >= -tol * max(1, lambda_max).
bool is_positive(const Operator& t, double tol);

/// Inverse with relative cutoff sigma_min > 1e-12 * sigma_max.
/// Throws NotInvertible carrying sigma_min.
Operator invert(const Operator& t);

inline constexpr double kInvertCutoff = 1e-12;

/// sum_n |<T e_n, e_n>| over a basis that must be orthonormal to 1e-10.
double trace_abs_over_basis(const Operator& t, const std::vector<Vec>& onb);

/// Orthonormal basis from the QR factorization of a seeded complex Gaussian matrix.
std::vector<Vec> random_onb(std::size_t d, std::uint64_t seed);

/// Matrix whose columns are the given vectors.
Operator columns_to_operator(const std::vector<Vec>& columns);

/// ||T - I|| in operator norm.
double identity_residual(const Operator& t);

}  // namespace cframe
