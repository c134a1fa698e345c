#include "cframe/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cframe/errors.hpp"
#include "cframe/random.hpp"

namespace cframe {

Complex inner(const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw ShapeError("inner: dimensions " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    Complex acc{0.0, 0.0};
    for (Eigen::Index t = 0; t < x.size(); ++t) acc += x(t) * std::conj(y(t));
    return acc;
}

Operator adjoint(const Operator& t) { return t.adjoint(); }

SchattenSpectrum singular_values(const Operator& t) {
    SchattenSpectrum out;
    if (t.size() == 0) return out;
    if (!t.allFinite()) throw NumericFailure("singular_values: operator has non-finite entries");
    Eigen::JacobiSVD<Operator> svd(t);
    const Eigen::VectorXd& s = svd.singularValues();
    if (!s.allFinite()) throw NumericFailure("singular_values: decomposition did not converge");
    out.singular_values.assign(s.data(), s.data() + s.size());
    // JacobiSVD returns them sorted; enforce the contract anyway for padded rectangular inputs.
    std::sort(out.singular_values.begin(), out.singular_values.end(), std::greater<>());
    return out;
}

double schatten_norm(const SchattenSpectrum& s, double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidParameter("schatten_norm requires p >= 1");
    if (s.singular_values.empty()) return 0.0;
    const double top = s.singular_values.front();
    if (std::isinf(p) || top == 0.0) return top;
    double acc = 0.0;
    for (double v : s.singular_values) acc += std::pow(v / top, p);
    return top * std::pow(acc, 1.0 / p);
}

double schatten_norm(const Operator& t, double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidParameter("schatten_norm requires p >= 1");
    return schatten_norm(singular_values(t), p);
}

double op_norm(const Operator& t) { return singular_values(t).largest(); }

namespace {

double hermitian_defect(const Operator& t) { return (t - t.adjoint()).norm(); }

}  // namespace

HermitianBounds hermitian_bounds(const Operator& t) {
    if (t.rows() != t.cols()) throw ShapeError("hermitian_bounds: operator is not square");
    if (t.size() == 0) throw ShapeError("hermitian_bounds: empty operator");
    const double scale = t.norm();
    if (hermitian_defect(t) > 1e-10 * std::max(scale, 1e-300))
        throw ContractViolation("hermitian_bounds: operator is not Hermitian");
    const Operator sym = 0.5 * (t + t.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> eig(sym, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw NumericFailure("hermitian_bounds: eigensolver failed");
    const auto& ev = eig.eigenvalues();
    return {ev.minCoeff(), ev.maxCoeff()};
}

bool is_positive(const Operator& t, double tol) {
    if (t.rows() != t.cols() || t.size() == 0) return false;
    if (hermitian_defect(t) > tol * std::max(1.0, t.norm())) return false;
    const Operator sym = 0.5 * (t + t.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> eig(sym, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) return false;
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    return lmin >= -tol * std::max(1.0, lmax);
}

Operator invert(const Operator& t) {
    if (t.rows() != t.cols() || t.size() == 0) throw ShapeError("invert: operator is not square");
    if (!t.allFinite()) throw NumericFailure("invert: operator has non-finite entries");
    Eigen::JacobiSVD<Operator> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double smax = s(0);
    const double smin = s(s.size() - 1);
    if (!(smin > kInvertCutoff * smax))
        throw NotInvertible("invert: smallest singular value " + std::to_string(smin) +
                                " is below the relative cutoff",
                            smin);
    Eigen::VectorXd inv_s = s.cwiseInverse();
    return svd.matrixV() * inv_s.asDiagonal() * svd.matrixU().adjoint();
}

double trace_abs_over_basis(const Operator& t, const std::vector<Vec>& onb) {
    const auto d = static_cast<std::size_t>(t.rows());
    if (t.rows() != t.cols()) throw ShapeError("trace_abs_over_basis: operator is not square");
    if (onb.size() != d) throw ShapeError("trace_abs_over_basis: basis has the wrong number of vectors");
    for (const auto& e : onb)
        if (static_cast<std::size_t>(e.size()) != d) throw ShapeError("trace_abs_over_basis: basis vector dimension");
    const Operator e = columns_to_operator(onb);
    const Operator gram = e.adjoint() * e;
    if ((gram - Operator::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10)
        throw ContractViolation("trace_abs_over_basis: basis is not orthonormal");
    double acc = 0.0;
    for (const auto& v : onb) acc += std::abs(inner(t * v, v));
    return acc;
}

std::vector<Vec> random_onb(std::size_t d, std::uint64_t seed) {
    if (d == 0) throw InvalidParameter("random_onb requires d >= 1");
    Rng rng(seed);
    const Operator g = rng.matrix(d, d);
    Eigen::HouseholderQR<Operator> qr(g);
    const Operator q = qr.householderQ() * Operator::Identity(static_cast<Eigen::Index>(d),
                                                               static_cast<Eigen::Index>(d));
    std::vector<Vec> out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = q.col(static_cast<Eigen::Index>(k));
    return out;
}

Operator columns_to_operator(const std::vector<Vec>& columns) {
    if (columns.empty()) return Operator();
    const Eigen::Index rows = columns.front().size();
    Operator out(rows, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k].size() != rows) throw ShapeError("columns_to_operator: ragged columns");
        out.col(static_cast<Eigen::Index>(k)) = columns[k];
    }
    return out;
}

double identity_residual(const Operator& t) {
    if (t.rows() != t.cols()) throw ShapeError("identity_residual: operator is not square");
    return op_norm(t - Operator::Identity(t.rows(), t.cols()));
}

}  // namespace cframe
