#include "cframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cframe/errors.hpp"

namespace cframe {

namespace {

Eigen::VectorXd weight_vector(const MeasureSpace& space) {
    const auto& w = space.weights();
    return Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
}

}  // namespace

SampledFrame::SampledFrame(MeasureSpace space, Operator vectors)
    : space_(std::move(space)), vectors_(std::move(vectors)) {
    if (static_cast<std::size_t>(vectors_.cols()) != space_.size())
        throw ShapeError("sampled frame has " + std::to_string(vectors_.cols()) + " columns for " +
                         std::to_string(space_.size()) + " points");
    if (vectors_.rows() == 0) throw ShapeError("sampled frame needs dimension d >= 1");
    if (!vectors_.allFinite()) throw InvalidInput("sampled frame has non-finite entries");
}

SampledFrame SampledFrame::transformed(const Operator& t) const {
    if (t.cols() != vectors_.rows()) throw ShapeError("transformed: operator dimension mismatch");
    return SampledFrame(space_, t * vectors_);
}

SampledFrame SampledFrame::scaled(Complex c) const { return SampledFrame(space_, c * vectors_); }

void require_compatible(const SampledFrame& f, const SampledFrame& g, const char* where) {
    if (!f.space().same_as(g.space())) throw ShapeError(std::string(where) + ": frames live on different spaces");
    if (f.dim() != g.dim()) throw ShapeError(std::string(where) + ": frames have different dimensions");
}

std::vector<Complex> analysis(const SampledFrame& f, const Vec& x) {
    if (static_cast<std::size_t>(x.size()) != f.dim())
        throw ShapeError("analysis: vector dimension " + std::to_string(x.size()) + ", frame dimension " +
                         std::to_string(f.dim()));
    // <x, F_j> = F_j^* x
    const Vec c = f.vectors().adjoint() * x;
    return {c.data(), c.data() + c.size()};
}

Vec synthesis(const SampledFrame& f, std::span<const Complex> c) {
    if (c.size() != f.size())
        throw ShapeError("synthesis: " + std::to_string(c.size()) + " coefficients for " +
                         std::to_string(f.size()) + " points");
    Vec weighted_c(static_cast<Eigen::Index>(c.size()));
    const auto& w = f.space().weights();
    for (std::size_t j = 0; j < c.size(); ++j) weighted_c(static_cast<Eigen::Index>(j)) = w[j] * c[j];
    return f.vectors() * weighted_c;
}

Operator frame_operator(const SampledFrame& f) {
    const Operator weighted_cols = f.vectors() * weight_vector(f.space()).asDiagonal();
    return weighted_cols * f.vectors().adjoint();
}

FrameBounds frame_bounds(const SampledFrame& f) {
    const auto hb = hermitian_bounds(frame_operator(f));
    FrameBounds out;
    out.B = std::max(hb.lambda_max, 0.0);
    out.A = std::clamp(hb.lambda_min, 0.0, out.B);
    out.is_frame = out.A > kFrameEpsilon * std::max(out.B, 1.0);
    return out;
}

double norm_bound(const SampledFrame& f) { return f.vectors().colwise().norm().maxCoeff(); }

SampledFrame canonical_dual(const SampledFrame& f) {
    const auto bounds = frame_bounds(f);
    if (!bounds.is_frame) throw NotAFrame("canonical_dual: lower frame bound is zero");
    return f.transformed(invert(frame_operator(f)));
}

bool is_dual_pair(const SampledFrame& f, const SampledFrame& g, double tol) {
    require_compatible(f, g, "is_dual_pair");
    const Operator mixed = g.vectors() * weight_vector(f.space()).asDiagonal() * f.vectors().adjoint();
    return identity_residual(mixed) <= tol;
}

bool is_riesz_type(const SampledFrame& f, double tol) {
    if (!frame_bounds(f).is_frame) throw NotAFrame("is_riesz_type: not a frame");
    // Analysis matrix: N x d, row j = F_j^*.
    const Operator analysis_matrix = f.vectors().adjoint();
    Eigen::JacobiSVD<Operator> svd(analysis_matrix);
    const Eigen::VectorXd& s = svd.singularValues();
    const double top = s(0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) >= tol * top) ++rank;
    return static_cast<std::size_t>(rank) == f.size();
}

SampledFrame tight_from_partition(const MeasureSpace& space, std::size_t k) {
    const auto parts = partition(space, k);
    Operator cols = Operator::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(space.size()));
    for (std::size_t i = 0; i < k; ++i) {
        double mass = 0.0;
        for (auto j : parts[i]) mass += space.weight(j);
        const double value = 1.0 / std::sqrt(mass);
        for (auto j : parts[i]) cols(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
    }
    return SampledFrame(space, std::move(cols));
}

double unbounded_profile(double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    if (ax < 1.0) return 1.0 / std::sqrt(ax);
    return 1.0 / (ax * ax);
}

SampledFrame scaled_singleton(const MeasureSpace& space, const Vec& h) {
    if (h.size() == 0 || h.norm() == 0.0) throw InvalidInput("scaled_singleton: h must be nonzero");
    Operator cols(h.size(), static_cast<Eigen::Index>(space.size()));
    for (std::size_t j = 0; j < space.size(); ++j) {
        const auto& p = space.points()[j];
        if (p.size() != 1) throw InvalidInput("scaled_singleton: expects a one-dimensional space");
        cols.col(static_cast<Eigen::Index>(j)) = std::sqrt(unbounded_profile(p[0])) * h;
    }
    return SampledFrame(space, std::move(cols));
}

SampledFrame perturb(const SampledFrame& g, const SampledFrame& f, double eps) {
    require_compatible(g, f, "perturb");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidParameter("perturb: eps must be positive");
    return SampledFrame(g.space(), g.vectors() + eps * f.vectors());
}

SampledFrame weighted(const SampledFrame& f, const Symbol& m) {
    if (!m.space().same_as(f.space())) throw ShapeError("weighted: symbol and frame live on different spaces");
    Operator cols = f.vectors();
    for (std::size_t j = 0; j < m.size(); ++j) {
        const Complex v = m[j];
        if (v.imag() != 0.0 || v.real() < 0.0)
            throw InvalidSymbol("weighted: weight " + std::to_string(j) + " is not a nonnegative real");
        cols.col(static_cast<Eigen::Index>(j)) *= std::sqrt(v.real());
    }
    return SampledFrame(f.space(), std::move(cols));
}

SampledFrame symbol_times(const SampledFrame& f, const Symbol& m) {
    if (!m.space().same_as(f.space())) throw ShapeError("symbol_times: symbol and frame live on different spaces");
    Operator cols = f.vectors();
    for (std::size_t j = 0; j < m.size(); ++j) cols.col(static_cast<Eigen::Index>(j)) *= m[j];
    return SampledFrame(f.space(), std::move(cols));
}

}  // namespace cframe
