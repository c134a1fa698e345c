#include <doctest.h>

#include <cmath>

#include "cframe/errors.hpp"
#include "cframe/multiplier.hpp"
#include "cframe/random.hpp"
#include "cframe/suites.hpp"

using namespace cframe;

namespace {

// M x = sum_j w_j m_j <x, F_j> G_j, evaluated column by column.
Operator multiplier_by_loops(const Symbol& m, const SampledFrame& f, const SampledFrame& g) {
    const auto d = static_cast<Eigen::Index>(f.dim());
    Operator out = Operator::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        const Vec e = Vec::Unit(d, k);
        for (std::size_t j = 0; j < f.size(); ++j)
            out.col(k) += f.space().weight(j) * m[j] * inner(e, f.column(j)) * g.column(j);
    }
    return out;
}

}  // namespace

TEST_CASE("multiplier matches the defining sum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_instance(seed, 6, 20);
        const Operator mm = multiplier(inst.m, inst.f, inst.g);
        CHECK((mm - multiplier_by_loops(inst.m, inst.f, inst.g)).norm() <= 1e-12 * std::max(1.0, mm.norm()));
    }
}

TEST_CASE("constant symbol with G = F gives the frame operator") {
    const auto inst = random_instance(5, 5, 20);
    const Operator mm = multiplier(Symbol::constant(inst.f.space(), 1.0), inst.f, inst.f);
    CHECK((mm - frame_operator(inst.f)).norm() <= 1e-13 * mm.norm());
}

TEST_CASE("diagonal singular values") {
    const Symbol m(counting_space(3), {Complex{3.0, 4.0}, -1.0, 0.5});
    const auto s = diag_singular_values(m);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == doctest::Approx(5.0));
    CHECK(s[1] == doctest::Approx(1.0));
    CHECK(s[2] == doctest::Approx(0.5));
}

TEST_CASE("budgets dominate the Schatten norms") {
    for (std::uint64_t seed = 100; seed < 200; ++seed) {
        const auto inst = random_instance(seed, 8, 64);
        const auto r = bound_budget(inst.m, inst.f, inst.g);
        CHECK(r.all_pass());
        for (const auto& [p, actual] : r.actuals) CHECK(actual <= r.schatten_budgets.at(p) + 1e-10);
        // p = inf and p = 1 use the closed forms.
        const auto in = budget_inputs(inst.f, inst.g);
        CHECK(r.op_budget == doctest::Approx(lp_norm(inst.m, kInfinity) * std::sqrt(in.bessel_f * in.bessel_g)));
        CHECK(r.trace_budget == doctest::Approx(lp_norm(inst.m, 1.0) * in.norm_f * in.norm_g));
        // The interpolated budget reduces to the endpoints.
        CHECK(schatten_budget(inst.m, in, 1.0) == doctest::Approx(r.trace_budget));
        CHECK(schatten_budget(inst.m, in, kInfinity) == doctest::Approx(r.op_budget));
    }
}

TEST_CASE("budget inputs") {
    const auto inst = random_instance(7, 5, 30);
    const auto in = budget_inputs(inst.f, inst.g);
    CHECK(in.bessel_f == doctest::Approx(frame_bounds(inst.f).B));
    CHECK(in.bessel_g == doctest::Approx(frame_bounds(inst.g).B));
    double lf = 0.0;
    for (std::size_t j = 0; j < inst.f.size(); ++j) lf = std::max(lf, inst.f.column(j).norm());
    CHECK(in.norm_f == doctest::Approx(lf));
}

TEST_CASE("budget report checks and the zero symbol") {
    const auto inst = random_instance(9, 4, 12);
    auto r = bound_budget(inst.m, inst.f, inst.g);
    for (auto c : r.checks()) CHECK(c.pass);
    const auto zero = bound_budget(inst.m * Complex{0.0, 0.0}, inst.f, inst.g);
    for (const auto& [p, actual] : zero.actuals) CHECK(actual == 0.0);
}

TEST_CASE("truncation") {
    const Symbol m(counting_space(4), {1.0, 2.0, 3.0, 4.0});
    const auto t = truncate_symbol(m, {1, 3});
    CHECK(t[0] == 0.0);
    CHECK(t[1] == 2.0);
    CHECK(t[2] == 0.0);
    CHECK(t[3] == 4.0);
    CHECK_THROWS_AS(truncate_symbol(m, {7}), ShapeError);
}

TEST_CASE("dual from an invertible multiplier") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = random_invertible_instance(seed, 6, 30);
        const auto h = dual_from_multiplier(inst.m, inst.f, inst.g);
        // sum_j w_j G_j H_j^* = I, checked by the defining sum.
        Operator s = Operator::Zero(static_cast<Eigen::Index>(h.dim()), static_cast<Eigen::Index>(h.dim()));
        for (std::size_t j = 0; j < h.size(); ++j) s += h.space().weight(j) * inst.g.column(j) * h.column(j).adjoint();
        CHECK(identity_residual(s) <= 1e-9);
    }
}

TEST_CASE("lower-bound certificates") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = random_invertible_instance(seed, 6, 30);
        const auto c = lower_bound_certificates(inst.m, inst.f, inst.g);
        CHECK(c.all_pass());
        const Operator inv = invert(multiplier(inst.m, inst.f, inst.g));
        const double inv_norm = op_norm(inv);
        CHECK(c.floor_mbar_f == doctest::Approx(1.0 / (frame_bounds(inst.g).B * inv_norm * inv_norm)).epsilon(1e-9));
        CHECK(c.floor_m_g == doctest::Approx(1.0 / (frame_bounds(inst.f).B * inv_norm * inv_norm)).epsilon(1e-9));
        CHECK(c.lower_mbar_f == doctest::Approx(frame_bounds(symbol_times(inst.f, inst.m.conj())).A).epsilon(1e-9));
    }
}

TEST_CASE("certificates reject a singular multiplier") {
    const auto inst = random_instance(3, 4, 12);
    CHECK_THROWS_AS(lower_bound_certificates(Symbol::constant(inst.f.space(), 0.0), inst.f, inst.g), NotInvertible);
}

TEST_CASE("symbol convergence stays within the Schatten budget") {
    const auto inst = random_instance(11, 6, 40);
    Rng rng(12);
    std::vector<Complex> u(inst.m.size());
    for (auto& v : u) v = rng.complex_normal();
    const Symbol unit(inst.m.space(), u);
    std::vector<Symbol> schedule;
    for (int n = 1; n <= 6; ++n) schedule.push_back(inst.m + unit * Complex{std::pow(0.5, n), 0.0});
    for (double p : {1.0, 2.0, 3.0, kInfinity}) {
        const auto r = convergence_experiment(inst, schedule, p);
        CHECK(r.all_within_budget());
        CHECK(r.monotone);
        REQUIRE(r.steps.size() == 6);
        CHECK(r.steps[0].measured == doctest::Approx(2.0 * r.steps[1].measured).epsilon(1e-9));
    }
}

TEST_CASE("frame convergence stays within the L2 and L1 budgets") {
    const auto inst = random_instance(13, 6, 40);
    Rng rng(14);
    const Operator u = rng.matrix(inst.f.dim(), inst.f.size());
    std::vector<SampledFrame> schedule;
    for (int n = 1; n <= 6; ++n) schedule.emplace_back(inst.f.space(), inst.f.vectors() + u / std::pow(2.0, n));
    for (auto kind : {ConvergenceKind::frame_uniform_L2, ConvergenceKind::frame_uniform_L1}) {
        const auto r = convergence_experiment(kind, inst, schedule);
        CHECK(r.all_within_budget());
        CHECK(r.monotone);
        // eps_n is the largest column deviation.
        CHECK(r.steps[0].discrepancy == doctest::Approx((u / 2.0).colwise().norm().maxCoeff()).epsilon(1e-12));
    }
    CHECK_THROWS_AS(convergence_experiment(ConvergenceKind::frame_uniform_L2, inst, {}), InvalidParameter);
}

TEST_CASE("mismatched spaces are rejected") {
    const auto a = random_instance(1, 3, 8);
    const auto b = random_instance(2, 3, 8);
    CHECK_THROWS_AS(multiplier(a.m, b.f, b.g), ShapeError);
}
