#include "cframe/controlled.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cframe/errors.hpp"

namespace cframe {

double ControlSpec::apply(double lambda) const {
    switch (kind) {
        case Kind::identity: return lambda;
        case Kind::inverse: return 1.0 / lambda;
        case Kind::sqrt: return std::sqrt(lambda);
        case Kind::power: return std::pow(lambda, t);
        case Kind::affine: return alpha + beta * lambda;
        case Kind::explicit_operator: break;
    }
    throw InvalidParameter("ControlSpec::apply: explicit operators have no scalar function");
}

std::string ControlSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::identity: os << "identity"; break;
        case Kind::inverse: os << "inverse"; break;
        case Kind::sqrt: os << "sqrt"; break;
        case Kind::power: os << "power(" << t << ")"; break;
        case Kind::affine: os << "affine(" << alpha << "," << beta << ")"; break;
        case Kind::explicit_operator: os << "explicit"; break;
    }
    return os.str();
}

namespace {

void require_gl(const Operator& c) {
    const auto s = singular_values(c);
    if (!(s.smallest() > kInvertCutoff * s.largest()))
        throw NotInvertible("control operator is not invertible", s.smallest());
}

}  // namespace

Operator make_control(const ControlSpec& spec, const SampledFrame& f) {
    const auto d = static_cast<Eigen::Index>(f.dim());
    if (!spec.spectral()) {
        if (spec.op.rows() != d || spec.op.cols() != d) throw ShapeError("make_control: explicit operator dimension");
        require_gl(spec.op);
        return spec.op;
    }
    if (!frame_bounds(f).is_frame) throw NotAFrame("make_control: spectral controls need a frame");
    const Operator s = frame_operator(f);
    Eigen::SelfAdjointEigenSolver<Operator> eig(0.5 * (s + s.adjoint()));
    if (eig.info() != Eigen::Success) throw NumericFailure("make_control: eigensolver failed");
    Eigen::VectorXd mapped(d);
    for (Eigen::Index k = 0; k < d; ++k) mapped(k) = spec.apply(eig.eigenvalues()(k));
    if (!mapped.allFinite()) throw NumericFailure("make_control: spectral function is not finite on spec(S_F)");
    const Operator c = eig.eigenvectors() * mapped.asDiagonal() * eig.eigenvectors().adjoint();
    require_gl(c);
    return c;
}

Operator controlled_frame_operator(const Operator& c, const SampledFrame& f) {
    if (c.rows() != c.cols() || static_cast<std::size_t>(c.cols()) != f.dim())
        throw ShapeError("controlled_frame_operator: dimension mismatch");
    const Operator controlled_cols = c * f.vectors();
    const auto& w = f.space().weights();
    Operator out = Operator::Zero(c.rows(), c.cols());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        out.noalias() += w[j] * controlled_cols.col(col) * f.vectors().col(col).adjoint();
    }
    return out;
}

ControlledBounds controlled_bounds(const Operator& c, const SampledFrame& f) {
    if (c.rows() != c.cols() || static_cast<std::size_t>(c.cols()) != f.dim())
        throw ShapeError("controlled_bounds: dimension mismatch");
    const Operator s = frame_operator(f);
    const double scale = std::max(c.norm(), 1e-300);
    if ((c - c.adjoint()).norm() > 1e-10 * scale)
        throw ContractViolation("controlled_bounds: control operator is not self-adjoint");
    if (!is_positive(c, 1e-10)) throw ContractViolation("controlled_bounds: control operator is not positive");
    if ((c * s - s * c).norm() > 1e-10 * scale * std::max(s.norm(), 1e-300))
        throw ContractViolation("controlled_bounds: control operator does not commute with S_F");
    const Operator l = c * s;
    const auto hb = hermitian_bounds(0.5 * (l + l.adjoint()));
    ControlledBounds out;
    out.m_cl = hb.lambda_min;
    out.M_cl = hb.lambda_max;
    out.frame_cross_check = frame_bounds(f).is_frame;
    return out;
}

double precondition_identity_residual(const ControlSpec& c_spec, const ControlSpec& d_spec, const Symbol& m,
                                      const SampledFrame& f, const SampledFrame& g) {
    const Operator c = make_control(c_spec, f);
    const Operator d = make_control(d_spec, g);
    const Operator mixed = multiplier(m, f.transformed(c), g.transformed(d));
    const Operator plain = multiplier(m, f, g);
    const double scale = op_norm(plain);
    const double diff = op_norm(invert(d) * mixed * invert(c) - plain);
    return scale > 0.0 ? diff / scale : diff;
}

}  // namespace cframe
