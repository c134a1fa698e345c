#include <doctest.h>

#include "cframe/errors.hpp"
#include "cframe/random.hpp"
#include "cframe/serialize.hpp"
#include "cframe/suites.hpp"

using namespace cframe;

namespace {

nlohmann::json without_timestamps(nlohmann::json j) {
    j.erase("started");
    j.erase("finished");
    return j;
}

}  // namespace

TEST_CASE("measure space, symbol and operator round trip through JSON") {
    Rng rng(61);
    const auto space = random_space(rng, 9);
    const auto back = space_from_json(nlohmann::json::parse(to_json(space).dump()));
    CHECK(back.weights() == space.weights());
    CHECK(back.points() == space.points());

    std::vector<Complex> v(9);
    for (auto& x : v) x = rng.complex_normal();
    const Symbol m(space, v);
    CHECK(symbol_from_json(nlohmann::json::parse(to_json(m).dump()), space).values() == m.values());

    const Operator t = rng.matrix(4, 4);
    CHECK(operator_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
}

TEST_CASE("frames round trip with one row per point") {
    Rng rng(62);
    const SampledFrame f(random_space(rng, 7), rng.matrix(3, 7));
    const auto j = to_json(f);
    CHECK(j.at("re").size() == 7);
    CHECK(j.at("re").at(0).size() == 3);
    const auto back = frame_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.vectors() == f.vectors());
    CHECK(back.space().weights() == f.space().weights());
}

TEST_CASE("control specs round trip") {
    Rng rng(63);
    for (const auto& spec : {ControlSpec::identity(), ControlSpec::inverse(), ControlSpec::square_root(),
                             ControlSpec::power(0.3), ControlSpec::affine(1.5, 0.25),
                             ControlSpec::explicit_op(rng.matrix(2, 2))}) {
        const auto back = control_from_json(to_json(spec));
        CHECK(back.kind == spec.kind);
        CHECK(back.t == spec.t);
        CHECK(back.alpha == spec.alpha);
        CHECK(back.beta == spec.beta);
        CHECK(back.op == spec.op);
    }
    CHECK_THROWS_AS(control_from_json(nlohmann::json{{"kind", "nope"}}), InvalidInput);
}

TEST_CASE("malformed JSON is rejected as invalid input") {
    CHECK_THROWS_AS(space_from_json(nlohmann::json{{"points", 3}}), InvalidInput);
    CHECK_THROWS_AS(operator_from_json(nlohmann::json{{"d", 2}, {"re", {{1, 2}}}, {"im", {{0, 0}}}}), ShapeError);
    CHECK_THROWS_AS(frame_from_json(nlohmann::json{{"d", 2}}), InvalidInput);
    CHECK_THROWS_AS(run_multiplier(nlohmann::json{{"space", {{"points", {{0.0}}}, {"weights", {1.0}}}}}), InvalidInput);
}

TEST_CASE("spectrum CSV") {
    CHECK(spectrum_csv(std::vector<double>{2.5, 1.0}) == "index,sigma\n0,2.5\n1,1\n");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(kInfinity) == "inf");
}

TEST_CASE("suite names") {
    for (const char* name : {"identities", "bounds", "convergence", "gabor", "wavelet", "controlled", "weighted", "all"}) {
        const auto s = parse_suite(name);
        REQUIRE(s.has_value());
        CHECK(to_string(*s) == name);
    }
    CHECK(!parse_suite("bogus").has_value());
    CHECK_THROWS_AS(suite_config_from_json(nlohmann::json{{"suite", "bogus"}}), InvalidParameter);
    CHECK_THROWS_AS(suite_config_from_json(nlohmann::json{{"trials", 0}}), InvalidParameter);
    CHECK_THROWS_AS(suite_config_from_json(nlohmann::json{{"d", "eight"}}), InvalidInput);
}

TEST_CASE("suite config round trip") {
    SuiteConfig c;
    c.suite = Suite::gabor;
    c.seed = 99;
    c.trials = 3;
    c.tolerances["gabor.tightness"] = 1e-9;
    const auto back = suite_config_from_json(to_json(c));
    CHECK(back.suite == Suite::gabor);
    CHECK(back.seed == 99);
    CHECK(back.trials == 3);
    CHECK(back.tolerance("gabor.tightness", 0.0) == 1e-9);
    CHECK(back.tolerance("other", 0.5) == 0.5);
}

TEST_CASE("identities suite passes and is deterministic") {
    SuiteConfig c;
    c.suite = Suite::identities;
    c.seed = 1;
    c.trials = 50;
    c.d = 4;
    c.n = 16;
    const auto a = run_suite(c);
    CHECK(a.all_pass());
    CHECK(!a.checks.empty());
    const auto b = run_suite(c);
    CHECK(without_timestamps(to_json(a)).dump() == without_timestamps(to_json(b)).dump());
    CHECK(std::is_sorted(a.checks.begin(), a.checks.end(),
                         [](const Check& x, const Check& y) { return x.check_id < y.check_id; }));
    for (const auto& check : a.checks) CHECK(!check.theorem_anchor.empty());

    c.seed = 2;
    CHECK(without_timestamps(to_json(run_suite(c))).dump() != without_timestamps(to_json(a)).dump());
}

TEST_CASE("tolerance overrides can fail a check") {
    SuiteConfig c;
    c.suite = Suite::identities;
    c.trials = 5;
    c.tolerances["multiplier.adjoint"] = -1.0;
    const auto r = run_suite(c);
    CHECK(!r.all_pass());
    for (const auto& check : r.checks) CHECK(check.pass == (check.check_id != "multiplier.adjoint"));
}

TEST_CASE("report JSON and CSV") {
    SuiteConfig c;
    c.suite = Suite::gabor;
    c.trials = 2;
    const auto r = run_suite(c);
    const auto j = to_json(r);
    CHECK(j.at("summary").at("total") == r.checks.size());
    CHECK(j.at("summary").at("passed") == r.passed());
    const auto back = report_from_json(nlohmann::json::parse(j.dump()));
    CHECK(to_json(back).dump() == j.dump());
    const auto csv = report_csv(r);
    CHECK(csv.rfind("check_id,theorem_anchor,measured,budget_or_expected,tolerance,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.checks.size()) + 1);

    auto tampered = j;
    tampered["summary"]["passed"] = 0;
    if (r.passed() != 0) CHECK_THROWS_AS(report_from_json(tampered), InvalidInput);
}

TEST_CASE("gabor run") {
    const auto r = run_gabor(8, WindowSpec::gaussian());
    CHECK(r.all_pass());
    const double g2 = r.details.at("g_norm_squared").get<double>();
    CHECK(std::abs(r.details.at("A").get<double>() - g2) <= 1e-10);
    const auto trivial = run_gabor(1, WindowSpec::gaussian());
    CHECK(trivial.all_pass());
    CHECK(trivial.details.at("A").get<double>() == doctest::Approx(trivial.details.at("B").get<double>()));
    CHECK_THROWS_AS(run_gabor(4, WindowSpec::given(Vec::Zero(4))), InvalidInput);
}

TEST_CASE("wavelet run rejects an inadmissible wavelet") {
    CHECK_THROWS_AS(run_wavelet(WaveletSpec::given([](double) { return Complex{}; }), WaveletRunConfig{}), InvalidInput);
}

TEST_CASE("multiplier run") {
    Rng rng(64);
    const SampledFrame f(random_space(rng, 12), rng.matrix(3, 12));
    const nlohmann::json config{{"space", to_json(f.space())}, {"F", to_json(f)}};
    const auto result = run_multiplier(config);
    CHECK(result.report.all_pass());
    bool has_identity = false;
    for (const auto& c : result.report.checks) has_identity = has_identity || c.check_id == "multiplier.frame_operator_identity";
    CHECK(has_identity);
    CHECK(result.singular_values.size() == 3);

    const auto random = run_multiplier(nlohmann::json{{"random", {{"seed", 7}, {"d", 8}, {"N", 64}}}});
    CHECK(random.report.all_pass());
    for (const char* id : {"budget.schatten_p1", "budget.schatten_p2", "budget.schatten_pinf"}) {
        bool found = false;
        for (const auto& c : random.report.checks) found = found || c.check_id == id;
        CHECK(found);
    }
}
