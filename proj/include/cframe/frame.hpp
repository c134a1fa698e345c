#pragma once

// Sampled continuous frames: a map omega_j -> F(omega_j) in C^d bound to a
// finite measure space.

#include <vector>

#include "cframe/hilbert.hpp"
#include "cframe/measure.hpp"

namespace cframe {

/// Column j holds F(omega_j). Coefficient functions (analysis output,
/// synthesis input) are unweighted samples; weights enter at integration.
class SampledFrame {
public:
    SampledFrame(MeasureSpace space, Operator vectors);

    const MeasureSpace& space() const noexcept { return space_; }
    const Operator& vectors() const noexcept { return vectors_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(vectors_.rows()); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(vectors_.cols()); }
    Vec column(std::size_t j) const { return vectors_.col(static_cast<Eigen::Index>(j)); }

    /// Same space, columns T * F_j.
    SampledFrame transformed(const Operator& t) const;
    SampledFrame scaled(Complex c) const;

private:
    MeasureSpace space_;
    Operator vectors_;
};

struct FrameBounds {
    double A = 0.0;  ///< optimal lower bound, lambda_min(S_F) clamped at 0
    double B = 0.0;  ///< optimal upper (Bessel) bound, lambda_max(S_F)
    bool is_frame = false;
};

/// is_frame threshold: A > kFrameEpsilon * max(B, 1).
inline constexpr double kFrameEpsilon = 1e-12;
/// Relative singular-value cutoff for the Riesz-type rank decision.
inline constexpr double kRieszRankTolerance = 1e-10;

/// c_j = <f, F(omega_j)>.
std::vector<Complex> analysis(const SampledFrame& f, const Vec& x);

/// sum_j w_j c_j F(omega_j).
Vec synthesis(const SampledFrame& f, std::span<const Complex> c);

/// S_F = sum_j w_j F_j F_j^*.
Operator frame_operator(const SampledFrame& f);

FrameBounds frame_bounds(const SampledFrame& f);

/// max_j ||F(omega_j)||.
double norm_bound(const SampledFrame& f);

/// Columns S_F^{-1} F_j. Throws NotAFrame when the lower bound vanishes.
SampledFrame canonical_dual(const SampledFrame& f);

/// ||sum_j w_j G_j F_j^* - I|| <= tol.
bool is_dual_pair(const SampledFrame& f, const SampledFrame& g, double tol);

/// The analysis operator C^d -> L^2(mu) is onto (rank N).
bool is_riesz_type(const SampledFrame& f, double tol = kRieszRankTolerance);

/// Constant e_i / sqrt(mu(part_i)) on the i-th contiguous part; S_F = I.
SampledFrame tight_from_partition(const MeasureSpace& space, std::size_t k);

/// The two-branch function of the norm-unbounded Bessel example:
/// 1/sqrt|x| on 0 < |x| < 1, 1/x^2 on |x| >= 1, 0 at x = 0.
double unbounded_profile(double x);

/// Columns sqrt(unbounded_profile(x_j)) * h over a 1-D space.
SampledFrame scaled_singleton(const MeasureSpace& space, const Vec& h);

/// Columns G_j + eps * F_j, eps > 0.
SampledFrame perturb(const SampledFrame& g, const SampledFrame& f, double eps);

/// Columns sqrt(m_j) F_j for a nonnegative real symbol.
SampledFrame weighted(const SampledFrame& f, const Symbol& m);

/// Columns c_j F_j for an arbitrary complex symbol (the family m F).
SampledFrame symbol_times(const SampledFrame& f, const Symbol& m);

/// Throws ShapeError unless both frames share a space and dimension.
void require_compatible(const SampledFrame& f, const SampledFrame& g, const char* where);

}  // namespace cframe
