#pragma once

// Continuous frame multipliers M_{m,F,G} = T_G D_m T_F^*: assembly, norm
// budgets, truncation, convergence in the ingredients, and the lower-bound
// certificates and dual construction for invertible multipliers.

#include <map>
#include <string>
#include <vector>

#include "cframe/frame.hpp"
#include "cframe/report.hpp"

namespace cframe {

/// sum_j w_j m_j G_j F_j^*.
Operator multiplier(const Symbol& m, const SampledFrame& f, const SampledFrame& g);

/// Singular values of the multiplication operator D_m on L^2(mu): {|m_j|}, descending.
std::vector<double> diag_singular_values(const Symbol& m);

/// Norm budget for ||M||_{S_p}. p = 1 and p = kInfinity are the endpoint
/// bounds; 1 < p < inf interpolates between them with 1/p + 1/q = 1.
struct BudgetInputs {
    double bessel_f = 0.0;  ///< B_F
    double bessel_g = 0.0;  ///< B_G
    double norm_f = 0.0;    ///< L_F
    double norm_g = 0.0;    ///< L_G
};

BudgetInputs budget_inputs(const SampledFrame& f, const SampledFrame& g);
double schatten_budget(const Symbol& m, const BudgetInputs& in, double p);

struct BudgetReport {
    double op_budget = 0.0;
    double trace_budget = 0.0;
    std::map<double, double> schatten_budgets;  ///< p -> budget
    std::map<double, double> actuals;           ///< p -> ||M||_{S_p}
    std::map<double, bool> pass;                ///< p -> actual <= budget + tol
    double tolerance = 1e-10;

    bool all_pass() const;
    std::vector<Check> checks() const;
};

inline const std::vector<double> kDefaultSchattenOrders{1.0, 1.5, 2.0, 3.0, kInfinity};

BudgetReport bound_budget(const Symbol& m, const SampledFrame& f, const SampledFrame& g,
                          const std::vector<double>& orders = kDefaultSchattenOrders,
                          double tolerance = 1e-10);

/// m on `keep`, zero elsewhere.
Symbol truncate_symbol(const Symbol& m, const std::vector<std::size_t>& keep);

/// Columns H_j = (M^{-1})^* conj(m_j) F_j; (H, G) is a dual pair.
SampledFrame dual_from_multiplier(const Symbol& m, const SampledFrame& f, const SampledFrame& g);

struct CertificateReport {
    // Part (1): conj(m) F satisfies the lower frame condition.
    double lower_mbar_f = 0.0;  ///< A_{conj(m) F}
    double floor_mbar_f = 0.0;  ///< 1 / (B_G ||(M^*)^{-1}||^2)
    // Part (2): m G satisfies the lower frame condition.
    double lower_m_g = 0.0;
    double floor_m_g = 0.0;     ///< 1 / (B_F ||M^{-1}||^2)
    // Part (3): F, mG and G, conj(m)F are frames.
    bool frames_f_mg = false;
    bool frames_g_mbarf = false;
    // Part (4): A_F >= A_{conj(m) F} / ||m||_inf^2.
    double lower_f = 0.0;
    double part4_floor = 0.0;
    bool division_degenerate = false;
    // Part (5): F and G are frames.
    bool frames_f_g = false;

    double tolerance = 1e-10;

    bool part1() const { return lower_mbar_f >= floor_mbar_f - tolerance; }
    bool part2() const { return lower_m_g >= floor_m_g - tolerance; }
    bool part3() const { return frames_f_mg && frames_g_mbarf; }
    bool part4() const { return !division_degenerate && lower_f >= part4_floor - tolerance; }
    bool part5() const { return frames_f_g; }
    bool all_pass() const { return part1() && part2() && part3() && part4() && part5(); }
    std::vector<Check> checks() const;
};

/// Requires an invertible multiplier (NotInvertible otherwise).
CertificateReport lower_bound_certificates(const Symbol& m, const SampledFrame& f, const SampledFrame& g,
                                           double tolerance = 1e-10);

enum class ConvergenceKind { symbol_p, frame_uniform_L2, frame_uniform_L1 };

struct ConvergenceStep {
    double discrepancy = 0.0;  ///< ||m_n - m||_p or sup_j ||F^(n)_j - F_j||
    double measured = 0.0;     ///< ||M_n - M|| (Schatten-p for symbol_p)
    double budget = 0.0;
    bool pass = false;
};

struct ConvergenceReport {
    ConvergenceKind kind{};
    double p = kInfinity;
    std::vector<ConvergenceStep> steps;
    bool monotone = false;  ///< measured is nonincreasing along the schedule
    double tolerance = 1e-10;

    bool all_within_budget() const;
    std::vector<Check> checks() const;
};

struct MultiplierInstance {
    Symbol m;
    SampledFrame f;
    SampledFrame g;
};

/// Perturbed symbols m_n (kind symbol_p, Schatten order p).
ConvergenceReport convergence_experiment(const MultiplierInstance& base, const std::vector<Symbol>& schedule,
                                         double p, double tolerance = 1e-10);

/// Perturbed analysis frames F^(n) (kinds frame_uniform_L2 / frame_uniform_L1).
ConvergenceReport convergence_experiment(ConvergenceKind kind, const MultiplierInstance& base,
                                         const std::vector<SampledFrame>& schedule, double tolerance = 1e-10);

std::string to_string(ConvergenceKind kind);

}  // namespace cframe
