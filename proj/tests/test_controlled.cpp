#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cframe/controlled.hpp"
#include "cframe/errors.hpp"
#include "cframe/random.hpp"
#include "cframe/suites.hpp"

using namespace cframe;

namespace {

// sum_j w_j (C F_j) F_j^* as explicit rank-one sums.
Operator lc_by_loops(const Operator& c, const SampledFrame& f) {
    Operator out = Operator::Zero(c.rows(), c.cols());
    for (std::size_t j = 0; j < f.size(); ++j)
        out += f.space().weight(j) * (c * f.column(j)) * f.column(j).adjoint();
    return out;
}

std::vector<double> eigenvalues(const Operator& t) {
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (t + t.adjoint()), Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

}  // namespace

TEST_CASE("spectral controls") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = random_instance(seed, 6, 30);
        const auto& f = inst.f;
        const Operator s = frame_operator(f);
        const double scale = s.norm();
        CHECK((make_control(ControlSpec::identity(), f) - s).norm() <= 1e-10 * scale);
        CHECK(identity_residual(make_control(ControlSpec::inverse(), f) * s) <= 1e-10);
        const Operator r = make_control(ControlSpec::square_root(), f);
        CHECK((r * r - s).norm() <= 1e-10 * scale);
        const Operator aff = make_control(ControlSpec::affine(2.0, 0.5), f);
        CHECK((aff - (2.0 * Operator::Identity(s.rows(), s.cols()) + 0.5 * s)).norm() <= 1e-10 * scale);
        const Operator p = make_control(ControlSpec::power(-0.5), f);
        CHECK(identity_residual(p * r) <= 1e-10);
    }
}

TEST_CASE("L_C = C S_F = S_F C^* and its spectrum") {
    Rng rng(51);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_instance(seed, 6, 30);
        const double t = rng.uniform(-1.0, 1.5);
        const auto spec = ControlSpec::power(t);
        const Operator c = make_control(spec, inst.f);
        const Operator s = frame_operator(inst.f);
        const Operator lc = controlled_frame_operator(c, inst.f);
        const double scale = lc.norm();
        CHECK((lc - lc_by_loops(c, inst.f)).norm() <= 1e-12 * scale);
        CHECK((lc - c * s).norm() <= 1e-10 * scale);
        CHECK((lc - s * c.adjoint()).norm() <= 1e-10 * scale);
        // spec(L_C) = lambda^{1 + t}.
        auto mapped = eigenvalues(s);
        for (auto& l : mapped) l = std::pow(l, 1.0 + t);
        std::sort(mapped.begin(), mapped.end());
        const auto actual = eigenvalues(lc);
        for (std::size_t k = 0; k < mapped.size(); ++k) CHECK(std::abs(actual[k] - mapped[k]) <= 1e-9 * scale);
        const auto b = controlled_bounds(c, inst.f);
        CHECK(b.m_cl == doctest::Approx(mapped.front()).epsilon(1e-9));
        CHECK(b.M_cl == doctest::Approx(mapped.back()).epsilon(1e-9));
        CHECK(b.frame_cross_check);
    }
}

TEST_CASE("explicit controls") {
    const auto inst = random_instance(3, 4, 16);
    Rng rng(52);
    Operator singular = Operator::Identity(static_cast<Eigen::Index>(inst.f.dim()), static_cast<Eigen::Index>(inst.f.dim()));
    singular(0, 0) = 0.0;
    CHECK_THROWS_AS(make_control(ControlSpec::explicit_op(singular), inst.f), NotInvertible);
    CHECK_THROWS_AS(make_control(ControlSpec::explicit_op(Operator::Identity(2, 2)), SampledFrame(counting_space(3), rng.matrix(3, 3))),
                    ShapeError);
    // A generic invertible operator does not commute with S_F.
    const Operator c = rng.matrix(inst.f.dim(), inst.f.dim());
    const Operator h = c * c.adjoint() + Operator::Identity(c.rows(), c.cols());
    if (inst.f.dim() > 1) CHECK_THROWS_AS(controlled_bounds(h, inst.f), ContractViolation);
    CHECK_THROWS_AS(controlled_bounds(-Operator::Identity(c.rows(), c.cols()), inst.f), ContractViolation);
}

TEST_CASE("spectral controls need a frame") {
    Operator v = Operator::Zero(3, 5);
    v.row(0).setOnes();
    const SampledFrame f(counting_space(5), v);
    CHECK_THROWS_AS(make_control(ControlSpec::square_root(), f), NotAFrame);
}

TEST_CASE("preconditioning identity") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_instance(seed, 6, 30);
        CHECK(precondition_identity_residual(ControlSpec::identity(), ControlSpec::identity(), inst.m, inst.f, inst.g) <= 1e-12);
        CHECK(precondition_identity_residual(ControlSpec::square_root(), ControlSpec::inverse(), inst.m, inst.f, inst.g) <= 1e-10);
        CHECK(precondition_identity_residual(ControlSpec::affine(1.0, 2.0), ControlSpec::power(0.7), inst.m, inst.f, inst.g) <=
              1e-10);
    }
}

TEST_CASE("control spec names and scalar functions") {
    CHECK(ControlSpec::power(0.5).apply(4.0) == doctest::Approx(2.0));
    CHECK(ControlSpec::affine(1.0, 3.0).apply(2.0) == doctest::Approx(7.0));
    CHECK(ControlSpec::inverse().apply(4.0) == doctest::Approx(0.25));
    CHECK(ControlSpec::square_root().name() == "sqrt");
    CHECK_THROWS_AS(ControlSpec::explicit_op(Operator::Identity(2, 2)).apply(1.0), InvalidParameter);
}
