#include "cframe/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cframe/errors.hpp"

namespace cframe {

namespace {

void require_instance(const Symbol& m, const SampledFrame& f, const SampledFrame& g, const char* where) {
    require_compatible(f, g, where);
    if (!m.space().same_as(f.space()))
        throw ShapeError(std::string(where) + ": symbol lives on a different space than the frames");
}

std::string order_label(double p) {
    if (std::isinf(p)) return "inf";
    std::ostringstream os;
    os << p;
    return os.str();
}

}  // namespace

Operator multiplier(const Symbol& m, const SampledFrame& f, const SampledFrame& g) {
    require_instance(m, f, g, "multiplier");
    const auto& w = f.space().weights();
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(m.size()));
    for (std::size_t j = 0; j < m.size(); ++j) diag(static_cast<Eigen::Index>(j)) = w[j] * m[j];
    return g.vectors() * diag.asDiagonal() * f.vectors().adjoint();
}

std::vector<double> diag_singular_values(const Symbol& m) {
    std::vector<double> out(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) out[j] = std::abs(m[j]);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

BudgetInputs budget_inputs(const SampledFrame& f, const SampledFrame& g) {
    return {frame_bounds(f).B, frame_bounds(g).B, norm_bound(f), norm_bound(g)};
}

double schatten_budget(const Symbol& m, const BudgetInputs& in, double p) {
    if (std::isnan(p) || p < 1.0) throw InvalidParameter("schatten_budget requires p >= 1");
    const double lf_lg = in.norm_f * in.norm_g;
    const double bf_bg = in.bessel_f * in.bessel_g;
    if (std::isinf(p)) return lp_norm(m, kInfinity) * std::sqrt(bf_bg);
    if (p == 1.0) return lp_norm(m, 1.0) * lf_lg;
    const double inv_q = 1.0 - 1.0 / p;
    return lp_norm(m, p) * std::pow(lf_lg, 1.0 / p) * std::pow(bf_bg, 0.5 * inv_q);
}

bool BudgetReport::all_pass() const {
    return std::all_of(pass.begin(), pass.end(), [](const auto& kv) { return kv.second; });
}

std::vector<Check> BudgetReport::checks() const {
    std::vector<Check> out;
    for (const auto& [p, budget] : schatten_budgets) {
        std::string anchor;
        if (std::isinf(p))
            anchor = "||M_{m,F,G}|| <= ||m||_inf sqrt(B_F B_G)";
        else if (p == 1.0)
            anchor = "||M_{m,F,G}||_{S_1} <= ||m||_1 L_F L_G";
        else
            anchor = "||M_{m,F,G}||_{S_p} <= ||m||_p (L_F L_G)^{1/p} (B_F B_G)^{1/2q}";
        out.push_back(bounded_check("budget.schatten_p" + order_label(p), anchor, actuals.at(p), budget, tolerance));
    }
    return out;
}

BudgetReport bound_budget(const Symbol& m, const SampledFrame& f, const SampledFrame& g,
                          const std::vector<double>& orders, double tolerance) {
    require_instance(m, f, g, "bound_budget");
    const auto in = budget_inputs(f, g);
    const auto spectrum = singular_values(multiplier(m, f, g));
    BudgetReport report;
    report.tolerance = tolerance;
    report.op_budget = schatten_budget(m, in, kInfinity);
    report.trace_budget = schatten_budget(m, in, 1.0);
    for (double p : orders) {
        const double budget = schatten_budget(m, in, p);
        const double actual = schatten_norm(spectrum, p);
        report.schatten_budgets[p] = budget;
        report.actuals[p] = actual;
        report.pass[p] = actual <= budget + tolerance;
    }
    return report;
}

Symbol truncate_symbol(const Symbol& m, const std::vector<std::size_t>& keep) {
    std::vector<Complex> values(m.size(), Complex{0.0, 0.0});
    for (auto j : keep) {
        if (j >= m.size()) throw ShapeError("truncate_symbol: index " + std::to_string(j) + " out of range");
        values[j] = m[j];
    }
    return Symbol(m.space(), std::move(values));
}

SampledFrame dual_from_multiplier(const Symbol& m, const SampledFrame& f, const SampledFrame& g) {
    require_instance(m, f, g, "dual_from_multiplier");
    const Operator inv = invert(multiplier(m, f, g));
    return symbol_times(f, m.conj()).transformed(inv.adjoint());
}

std::vector<Check> CertificateReport::checks() const {
    std::vector<Check> out;
    out.push_back(bounded_check("certificate.part1",
                                "A_{conj(m)F} >= 1 / (B_G ||(M^*_{m,F,G})^{-1}||^2)",
                                floor_mbar_f - lower_mbar_f, 0.0, tolerance));
    out.push_back(bounded_check("certificate.part2", "A_{mG} >= 1 / (B_F ||M_{m,F,G}^{-1}||^2)",
                                floor_m_g - lower_m_g, 0.0, tolerance));
    Check c3{"certificate.part3", "F, mG and G, conj(m)F are continuous frames",
             part3() ? 1.0 : 0.0, 1.0, 0.0, part3(), {}};
    out.push_back(c3);
    Check c4 = bounded_check("certificate.part4", "A_F >= A_{conj(m)F} / ||m||_inf^2", part4_floor - lower_f, 0.0,
                             tolerance);
    if (division_degenerate) {
        c4.pass = false;
        c4.diagnostic = "zero symbol: ||m||_inf = 0";
    }
    out.push_back(c4);
    Check c5{"certificate.part5", "F and G are continuous frames", part5() ? 1.0 : 0.0, 1.0, 0.0, part5(), {}};
    out.push_back(c5);
    return out;
}

CertificateReport lower_bound_certificates(const Symbol& m, const SampledFrame& f, const SampledFrame& g,
                                           double tolerance) {
    require_instance(m, f, g, "lower_bound_certificates");
    const Operator mm = multiplier(m, f, g);
    // ||(M^*)^{-1}|| = ||M^{-1}|| = 1 / sigma_min(M).
    const Operator inv = invert(mm);
    const double inv_norm = op_norm(inv);

    const auto bf = frame_bounds(f);
    const auto bg = frame_bounds(g);
    const auto mbar_f = frame_bounds(symbol_times(f, m.conj()));
    const auto m_g = frame_bounds(symbol_times(g, m));

    CertificateReport r;
    r.tolerance = tolerance;
    r.lower_mbar_f = mbar_f.A;
    r.floor_mbar_f = 1.0 / (bg.B * inv_norm * inv_norm);
    r.lower_m_g = m_g.A;
    r.floor_m_g = 1.0 / (bf.B * inv_norm * inv_norm);
    r.frames_f_mg = bf.is_frame && m_g.is_frame;
    r.frames_g_mbarf = bg.is_frame && mbar_f.is_frame;
    r.lower_f = bf.A;
    const double sup = lp_norm(m, kInfinity);
    if (sup > 0.0) {
        r.part4_floor = mbar_f.A / (sup * sup);
    } else {
        r.division_degenerate = true;
    }
    r.frames_f_g = bf.is_frame && bg.is_frame;
    return r;
}

bool ConvergenceReport::all_within_budget() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.pass; });
}

std::string to_string(ConvergenceKind kind) {
    switch (kind) {
        case ConvergenceKind::symbol_p: return "symbol_p";
        case ConvergenceKind::frame_uniform_L2: return "frame_uniform_L2";
        case ConvergenceKind::frame_uniform_L1: return "frame_uniform_L1";
    }
    return "unknown";
}

std::vector<Check> ConvergenceReport::checks() const {
    std::string anchor;
    switch (kind) {
        case ConvergenceKind::symbol_p:
            anchor = "||M_{m_n,F,G} - M_{m,F,G}||_{S_p} = ||M_{m_n - m,F,G}||_{S_p} -> 0";
            break;
        case ConvergenceKind::frame_uniform_L2:
            anchor = "||M_{m,F^(n),G} - M_{m,F,G}|| <= eps ||m||_2 (B_G)^{1/2}";
            break;
        case ConvergenceKind::frame_uniform_L1:
            anchor = "||M_{m,F^(n),G} - M_{m,F,G}|| <= eps ||m||_1 L_G";
            break;
    }
    std::vector<Check> out;
    const std::string base = "convergence." + to_string(kind);
    // Worst margin over the schedule.
    double worst = -kInfinity;
    double worst_budget = 0.0;
    for (const auto& s : steps) {
        if (s.measured - s.budget > worst) {
            worst = s.measured - s.budget;
            worst_budget = s.budget;
        }
    }
    Check c = bounded_check(base + ".budget", anchor, worst, 0.0, tolerance);
    c.diagnostic = "largest measured - budget over " + std::to_string(steps.size()) +
                   " steps (budget there " + std::to_string(worst_budget) + ")";
    out.push_back(c);
    out.push_back(Check{base + ".monotone", anchor, monotone ? 1.0 : 0.0, 1.0, 0.0, monotone, {}});
    return out;
}

namespace {

bool nonincreasing(const std::vector<ConvergenceStep>& steps, double slack) {
    for (std::size_t k = 1; k < steps.size(); ++k)
        if (steps[k].measured > steps[k - 1].measured + slack) return false;
    return true;
}

}  // namespace

ConvergenceReport convergence_experiment(const MultiplierInstance& base, const std::vector<Symbol>& schedule,
                                         double p, double tolerance) {
    if (schedule.empty()) throw InvalidParameter("convergence_experiment: empty schedule");
    if (std::isnan(p) || p < 1.0) throw InvalidParameter("convergence_experiment: p must be >= 1");
    const Operator reference = multiplier(base.m, base.f, base.g);
    const auto in = budget_inputs(base.f, base.g);
    ConvergenceReport r;
    r.kind = ConvergenceKind::symbol_p;
    r.p = p;
    r.tolerance = tolerance;
    for (const auto& mn : schedule) {
        const Symbol diff = mn - base.m;
        ConvergenceStep s;
        s.discrepancy = lp_norm(diff, p);
        s.measured = schatten_norm(multiplier(mn, base.f, base.g) - reference, p);
        s.budget = schatten_budget(diff, in, p);
        s.pass = s.measured <= s.budget + tolerance;
        r.steps.push_back(s);
    }
    r.monotone = nonincreasing(r.steps, tolerance);
    return r;
}

ConvergenceReport convergence_experiment(ConvergenceKind kind, const MultiplierInstance& base,
                                         const std::vector<SampledFrame>& schedule, double tolerance) {
    if (kind == ConvergenceKind::symbol_p)
        throw InvalidParameter("convergence_experiment: symbol_p takes a schedule of symbols");
    if (schedule.empty()) throw InvalidParameter("convergence_experiment: empty schedule");
    const Operator reference = multiplier(base.m, base.f, base.g);
    const double bessel_g = frame_bounds(base.g).B;
    const double norm_g = norm_bound(base.g);
    const double m2 = lp_norm(base.m, 2.0);
    const double m1 = lp_norm(base.m, 1.0);
    ConvergenceReport r;
    r.kind = kind;
    r.tolerance = tolerance;
    for (const auto& fn : schedule) {
        require_compatible(fn, base.f, "convergence_experiment");
        ConvergenceStep s;
        s.discrepancy = (fn.vectors() - base.f.vectors()).colwise().norm().maxCoeff();
        s.measured = op_norm(multiplier(base.m, fn, base.g) - reference);
        s.budget = kind == ConvergenceKind::frame_uniform_L2 ? s.discrepancy * m2 * std::sqrt(bessel_g)
                                                             : s.discrepancy * m1 * norm_g;
        s.pass = s.measured <= s.budget + tolerance;
        r.steps.push_back(s);
    }
    r.monotone = nonincreasing(r.steps, tolerance);
    return r;
}

}  // namespace cframe
