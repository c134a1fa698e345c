// cframe: run verification suites and single experiments, print reports.
//
// Exit status: 0 when every check passes, 1 when some check fails,
// 2 for usage errors and invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cframe/errors.hpp"
#include "cframe/serialize.hpp"
#include "cframe/suites.hpp"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::string render(const cframe::Report& r, const std::string& format) {
    if (format == "csv") return cframe::report_csv(r);
    return cframe::to_json(r).dump(2) + "\n";
}

int emit(const cframe::Report& r, const std::string& path, const std::string& format) {
    write_text(path, render(r, format));
    std::cerr << r.suite << ": " << r.passed() << "/" << r.checks.size() << " checks passed\n";
    for (const auto& c : r.checks)
        if (!c.pass)
            std::cerr << "  FAIL " << c.check_id << " measured=" << cframe::format_double(c.measured)
                      << " budget=" << cframe::format_double(c.budget) << (c.diagnostic.empty() ? "" : " (" + c.diagnostic + ")")
                      << "\n";
    return r.all_pass() ? 0 : kExitFailedChecks;
}

std::pair<std::string, double> parse_tolerance(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects KEY=VALUE, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(val, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != val.size() || !(v >= 0.0)) throw UsageError("--tol value must be a nonnegative number: '" + kv + "'");
    return {key, v};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampled continuous frames, multipliers and verification suites"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
    std::string suite_name = "all", config_path, out_path, format = "json";
    std::uint64_t seed = 1;
    std::size_t trials = 200, dim = 8, points = 64;
    std::vector<std::string> tol_args;
    verify->add_option("--suite", suite_name, "identities|bounds|convergence|gabor|wavelet|controlled|weighted|all");
    verify->add_option("--seed", seed, "Master seed");
    verify->add_option("--trials", trials, "Random instances per check");
    verify->add_option("--d", dim, "Largest Hilbert dimension");
    verify->add_option("--n", points, "Largest number of points");
    verify->add_option("--tol", tol_args, "Tolerance override KEY=VALUE (repeatable)");
    verify->add_option("--out", out_path, "Report path (stdout if omitted)");
    verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--config", config_path, "SuiteConfig JSON; flags given explicitly override it");

    // gabor
    auto* gabor = app.add_subcommand("gabor", "Gabor system on Z_d x Z_d");
    std::size_t gabor_d = 8;
    std::string window = "gaussian", gabor_out;
    std::vector<double> samples;
    double width = 0.0;
    gabor->add_option("--d", gabor_d, "Signal length")->check(CLI::PositiveNumber);
    gabor->add_option("--window", window, "gaussian|impulse|samples")->check(CLI::IsMember({"gaussian", "impulse", "samples"}));
    gabor->add_option("--samples", samples, "Real window samples for --window samples");
    gabor->add_option("--width", width, "Gaussian width (default sqrt(d))");
    gabor->add_option("--out", gabor_out, "Report path");

    // wavelet
    auto* wavelet = app.add_subcommand("wavelet", "Wavelet system on a log-scale grid");
    cframe::WaveletRunConfig wcfg;
    std::string wavelet_name = "mexican-hat", wavelet_out;
    wavelet->add_option("--d", wcfg.d, "Signal length")->check(CLI::PositiveNumber);
    wavelet->add_option("--a-min", wcfg.a_min, "Smallest scale");
    wavelet->add_option("--a-max", wcfg.a_max, "Largest scale");
    wavelet->add_option("--n-a", wcfg.n_a, "Number of scales");
    wavelet->add_option("--n-b", wcfg.n_b, "Number of shifts (default d)");
    wavelet->add_option("--wavelet", wavelet_name, "mexican-hat|zero")->check(CLI::IsMember({"mexican-hat", "zero"}));
    wavelet->add_option("--band-center", wcfg.band_center, "Centre frequency of the test signal");
    wavelet->add_option("--band-width", wcfg.band_width, "Spectral width of the test signal");
    wavelet->add_option("--out", wavelet_out, "Report path");

    // multiplier
    auto* mult = app.add_subcommand("multiplier", "Multiplier budgets for frames and a symbol from a JSON file");
    std::string mult_config, mult_out, sigma_out;
    mult->add_option("--config", mult_config, "Config JSON")->required();
    mult->add_option("--out", mult_out, "Report path");
    mult->add_option("--sigma-out", sigma_out, "Singular values CSV path");

    // report
    auto* report = app.add_subcommand("report", "Re-render a saved JSON report");
    std::string report_in, report_format = "json";
    report->add_option("--in", report_in, "Report JSON")->required();
    report->add_option("--format", report_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) {
            cframe::SuiteConfig cfg;
            if (!config_path.empty()) cfg = cframe::suite_config_from_json(read_json_file(config_path));
            if (verify->count("--suite") || config_path.empty()) {
                const auto s = cframe::parse_suite(suite_name);
                if (!s) throw UsageError("unknown suite '" + suite_name + "'");
                cfg.suite = *s;
            }
            if (verify->count("--seed")) cfg.seed = seed;
            if (verify->count("--trials")) cfg.trials = trials;
            if (verify->count("--d")) cfg.d = dim;
            if (verify->count("--n")) cfg.n = points;
            if (verify->count("--format")) cfg.format = format;
            if (verify->count("--out")) cfg.output = out_path;
            for (const auto& kv : tol_args) cfg.tolerances.insert_or_assign(parse_tolerance(kv).first, parse_tolerance(kv).second);
            cfg.validate();
            return emit(cframe::run_suite(cfg), cfg.output, cfg.format);
        }
        if (*gabor) {
            cframe::WindowSpec spec = cframe::WindowSpec::gaussian(width);
            if (window == "impulse") {
                spec = cframe::WindowSpec::given(cframe::Vec::Unit(static_cast<Eigen::Index>(gabor_d), 0));
            } else if (window == "samples") {
                if (samples.size() != gabor_d) throw UsageError("--samples needs exactly d values");
                cframe::Vec g(static_cast<Eigen::Index>(gabor_d));
                for (std::size_t k = 0; k < gabor_d; ++k) g(static_cast<Eigen::Index>(k)) = samples[k];
                spec = cframe::WindowSpec::given(g);
            }
            return emit(cframe::run_gabor(gabor_d, spec), gabor_out, "json");
        }
        if (*wavelet) {
            const auto psi = wavelet_name == "zero" ? cframe::WaveletSpec::given([](double) { return cframe::Complex{}; })
                                                    : cframe::WaveletSpec::mexican_hat();
            return emit(cframe::run_wavelet(psi, wcfg), wavelet_out, "json");
        }
        if (*mult) {
            const auto result = cframe::run_multiplier(read_json_file(mult_config));
            if (!sigma_out.empty()) write_text(sigma_out, cframe::spectrum_csv(result.singular_values));
            return emit(result.report, mult_out, "json");
        }
        if (*report) {
            const auto r = cframe::report_from_json(read_json_file(report_in));
            write_text("", render(r, report_format));
            return r.all_pass() ? 0 : kExitFailedChecks;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cframe::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
