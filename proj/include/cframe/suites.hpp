#pragma once

// Seeded verification suites and the reports they produce. Every measured
// value is a deterministic function of (suite, seed, trials, d, N); only the
// timestamps vary between runs.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cframe/multiplier.hpp"
#include "cframe/report.hpp"
#include "cframe/tf_frames.hpp"

namespace cframe {

enum class Suite { identities, bounds, convergence, gabor, wavelet, controlled, weighted, all };

std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite s);

struct SuiteConfig {
    Suite suite = Suite::all;
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t d = 8;   ///< largest Hilbert dimension drawn
    std::size_t n = 64;  ///< largest point count drawn
    std::map<std::string, double> tolerances;  ///< check-id -> override
    std::string output;
    std::string format = "json";

    /// Throws InvalidParameter for trials/d/n == 0 or an unknown format.
    void validate() const;
    double tolerance(const std::string& check_id, double fallback) const;
};

SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuiteConfig& c);

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t d = 0;
    std::size_t n = 0;
    std::string started;
    std::string finished;
    std::vector<Check> checks;  ///< sorted by check_id
    nlohmann::json details = nlohmann::json::object();

    std::size_t passed() const;
    bool all_pass() const { return passed() == checks.size(); }
    void sort_checks();
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
/// Header: check_id,theorem_anchor,measured,budget_or_expected,tolerance,pass
std::string report_csv(const Report& r);

/// A random multiplier instance: d in [1, d_max], N in [min(2d, n_max), n_max],
/// weights in (0.1, 1) * 2/N, complex Gaussian frame columns and symbol.
MultiplierInstance random_instance(std::uint64_t seed, std::size_t d_max, std::size_t n_max);

/// Like random_instance, redrawn until the multiplier passes invert.
MultiplierInstance random_invertible_instance(std::uint64_t seed, std::size_t d_max, std::size_t n_max);

Report run_suite(const SuiteConfig& config);

/// Gabor tightness for one window. Throws InvalidInput for a zero window.
Report run_gabor(std::size_t d, const WindowSpec& window);

struct WaveletRunConfig {
    std::size_t d = 512;
    double a_min = 1.0 / 64.0;
    double a_max = 4.0;
    std::size_t n_a = 64;
    std::size_t n_b = 0;  ///< 0 means d (one full period of shifts)
    double band_center = 6.0;
    double band_width = 1.2;
    double residual_tolerance = 0.02;
    double ratio_low = 1.5;
    double ratio_high = 3.0;
};

/// Calderon residual, admissibility constant and refinement ratio.
/// Throws InvalidInput for an inadmissible wavelet.
Report run_wavelet(const WaveletSpec& psi, const WaveletRunConfig& config);

struct MultiplierRunResult {
    Report report;
    std::vector<double> singular_values;
};

/// Config: {"space": ..., "F": frame, "G": frame, "symbol": {"re","im"}} with
/// optional "G" (defaults to F) and "symbol" (defaults to 1), or
/// {"random": {"seed": s, "d": d, "N": n}}.
MultiplierRunResult run_multiplier(const nlohmann::json& config);

/// UTC ISO-8601 wall-clock time; used only for report timestamps.
std::string utc_timestamp();

}  // namespace cframe
