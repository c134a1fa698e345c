#pragma once

// Controlled continuous frames: L_C f = sum_j w_j <f, F_j> C F_j = C S_F.

#include <optional>
#include <string>

#include "cframe/frame.hpp"
#include "cframe/multiplier.hpp"

namespace cframe {

/// Either a scalar function applied spectrally to S_F, or an explicit operator.
struct ControlSpec {
    enum class Kind { identity, inverse, sqrt, power, affine, explicit_operator };
    Kind kind = Kind::identity;
    double t = 1.0;      ///< exponent for power
    double alpha = 0.0;  ///< affine: alpha + beta * lambda
    double beta = 1.0;
    Operator op;         ///< explicit_operator

    static ControlSpec identity() { return {Kind::identity, 1.0, 0.0, 1.0, {}}; }
    static ControlSpec inverse() { return {Kind::inverse, 1.0, 0.0, 1.0, {}}; }
    static ControlSpec square_root() { return {Kind::sqrt, 1.0, 0.0, 1.0, {}}; }
    static ControlSpec power(double t) { return {Kind::power, t, 0.0, 1.0, {}}; }
    static ControlSpec affine(double alpha, double beta) { return {Kind::affine, 1.0, alpha, beta, {}}; }
    static ControlSpec explicit_op(Operator c) { return {Kind::explicit_operator, 1.0, 0.0, 1.0, std::move(c)}; }

    bool spectral() const noexcept { return kind != Kind::explicit_operator; }
    /// phi(lambda) for spectral kinds.
    double apply(double lambda) const;
    std::string name() const;
};

/// phi(S_F) via the eigendecomposition of S_F, or the explicit operator.
/// Throws NotAFrame (spectral kinds on a non-frame) or NotInvertible.
Operator make_control(const ControlSpec& spec, const SampledFrame& f);

/// sum_j w_j (C F_j) F_j^*, assembled from the transformed columns.
Operator controlled_frame_operator(const Operator& c, const SampledFrame& f);

struct ControlledBounds {
    double m_cl = 0.0;
    double M_cl = 0.0;
    bool frame_cross_check = false;  ///< frame_bounds(F).is_frame
};

/// Extreme eigenvalues of C S_F. C must be self-adjoint, positive and
/// commute with S_F (each to 1e-10, ContractViolation otherwise).
ControlledBounds controlled_bounds(const Operator& c, const SampledFrame& f);

/// ||D^{-1} M_{m, C F, D G} C^{-1} - M_{m,F,G}|| / ||M_{m,F,G}|| with
/// C = make_control(c_spec, F), D = make_control(d_spec, G).
double precondition_identity_residual(const ControlSpec& c_spec, const ControlSpec& d_spec, const Symbol& m,
                                      const SampledFrame& f, const SampledFrame& g);

}  // namespace cframe
