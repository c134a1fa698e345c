#include "cframe/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "cframe/errors.hpp"

namespace cframe {

namespace {

json complex_matrix_parts(const Operator& t, bool transpose, const char* part) {
    json rows = json::array();
    const Eigen::Index outer = transpose ? t.cols() : t.rows();
    const Eigen::Index inner_n = transpose ? t.rows() : t.cols();
    for (Eigen::Index r = 0; r < outer; ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < inner_n; ++c) {
            const Complex v = transpose ? t(c, r) : t(r, c);
            row.push_back(part[0] == 'r' ? v.real() : v.imag());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Operator matrix_from_parts(const json& re, const json& im, bool transpose, Eigen::Index rows_expected,
                           Eigen::Index cols_expected) {
    if (!re.is_array() || !im.is_array() || re.size() != im.size())
        throw InvalidInput("matrix JSON: 're' and 'im' must be arrays of equal length");
    const auto outer = static_cast<Eigen::Index>(re.size());
    if (outer != (transpose ? cols_expected : rows_expected))
        throw ShapeError("matrix JSON: unexpected number of rows");
    Operator out(rows_expected, cols_expected);
    for (Eigen::Index r = 0; r < outer; ++r) {
        const auto& rr = re.at(static_cast<std::size_t>(r));
        const auto& ii = im.at(static_cast<std::size_t>(r));
        if (!rr.is_array() || !ii.is_array() || rr.size() != ii.size())
            throw InvalidInput("matrix JSON: ragged row");
        const auto inner_n = static_cast<Eigen::Index>(rr.size());
        if (inner_n != (transpose ? rows_expected : cols_expected)) throw ShapeError("matrix JSON: row length");
        for (Eigen::Index c = 0; c < inner_n; ++c) {
            const Complex v{rr.at(static_cast<std::size_t>(c)).get<double>(), ii.at(static_cast<std::size_t>(c)).get<double>()};
            if (transpose)
                out(c, r) = v;
            else
                out(r, c) = v;
        }
    }
    return out;
}

}  // namespace

json to_json(const MeasureSpace& space) {
    return json{{"points", space.points()}, {"weights", space.weights()}};
}

MeasureSpace space_from_json(const json& j) {
    try {
        return MeasureSpace(j.at("points").get<std::vector<std::vector<double>>>(),
                            j.at("weights").get<std::vector<double>>());
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("measure space JSON: ") + e.what());
    }
}

json to_json(const Symbol& m) {
    std::vector<double> re(m.size()), im(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
        re[j] = m[j].real();
        im[j] = m[j].imag();
    }
    return json{{"re", re}, {"im", im}};
}

Symbol symbol_from_json(const json& j, const MeasureSpace& space) {
    try {
        const auto re = j.at("re").get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
        if (im.size() != re.size()) throw ShapeError("symbol JSON: 're' and 'im' lengths differ");
        std::vector<Complex> values(re.size());
        for (std::size_t k = 0; k < re.size(); ++k) values[k] = {re[k], im[k]};
        return Symbol(space, std::move(values));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("symbol JSON: ") + e.what());
    }
}

json to_json(const Operator& t) {
    return json{{"d", t.rows()}, {"re", complex_matrix_parts(t, false, "re")}, {"im", complex_matrix_parts(t, false, "im")}};
}

Operator operator_from_json(const json& j) {
    try {
        const auto d = j.at("d").get<Eigen::Index>();
        if (d < 1) throw InvalidInput("operator JSON: d must be >= 1");
        return matrix_from_parts(j.at("re"), j.at("im"), false, d, d);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("operator JSON: ") + e.what());
    }
}

json to_json(const SampledFrame& f) {
    return json{{"space", to_json(f.space())},
                {"d", f.dim()},
                {"re", complex_matrix_parts(f.vectors(), true, "re")},
                {"im", complex_matrix_parts(f.vectors(), true, "im")}};
}

SampledFrame frame_from_json(const json& j, const MeasureSpace& space) {
    try {
        const auto d = j.at("d").get<Eigen::Index>();
        if (d < 1) throw InvalidInput("frame JSON: d must be >= 1");
        const auto n = static_cast<Eigen::Index>(space.size());
        const json im = j.contains("im") ? j.at("im") : json(std::vector<std::vector<double>>(
                                                             space.size(), std::vector<double>(static_cast<std::size_t>(d), 0.0)));
        return SampledFrame(space, matrix_from_parts(j.at("re"), im, true, d, n));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("frame JSON: ") + e.what());
    }
}

SampledFrame frame_from_json(const json& j) {
    if (!j.contains("space")) throw InvalidInput("frame JSON: missing 'space'");
    return frame_from_json(j, space_from_json(j.at("space")));
}

json to_json(const ControlSpec& spec) {
    switch (spec.kind) {
        case ControlSpec::Kind::identity: return json{{"kind", "identity"}};
        case ControlSpec::Kind::inverse: return json{{"kind", "inverse"}};
        case ControlSpec::Kind::sqrt: return json{{"kind", "sqrt"}};
        case ControlSpec::Kind::power: return json{{"kind", "power"}, {"t", spec.t}};
        case ControlSpec::Kind::affine: return json{{"kind", "affine"}, {"alpha", spec.alpha}, {"beta", spec.beta}};
        case ControlSpec::Kind::explicit_operator: return json{{"kind", "explicit"}, {"operator", to_json(spec.op)}};
    }
    return json{};
}

ControlSpec control_from_json(const json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "identity") return ControlSpec::identity();
        if (kind == "inverse") return ControlSpec::inverse();
        if (kind == "sqrt") return ControlSpec::square_root();
        if (kind == "power") return ControlSpec::power(j.at("t").get<double>());
        if (kind == "affine") return ControlSpec::affine(j.at("alpha").get<double>(), j.at("beta").get<double>());
        if (kind == "explicit") return ControlSpec::explicit_op(operator_from_json(j.at("operator")));
        throw InvalidInput("control spec JSON: unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("control spec JSON: ") + e.what());
    }
}

namespace {

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    return arr;
}

std::string order_key(double p) { return std::isinf(p) ? "inf" : format_double(p); }

}  // namespace

json to_json(const BudgetReport& r) {
    json budgets = json::object(), actuals = json::object();
    for (const auto& [p, b] : r.schatten_budgets) budgets[order_key(p)] = b;
    for (const auto& [p, a] : r.actuals) actuals[order_key(p)] = a;
    return json{{"op_budget", r.op_budget},
                {"trace_budget", r.trace_budget},
                {"schatten_budgets", budgets},
                {"actuals", actuals},
                {"checks", checks_json(r.checks())}};
}

json to_json(const CertificateReport& r) {
    return json{{"lower_mbar_f", r.lower_mbar_f},   {"floor_mbar_f", r.floor_mbar_f},
                {"lower_m_g", r.lower_m_g},         {"floor_m_g", r.floor_m_g},
                {"lower_f", r.lower_f},             {"part4_floor", r.part4_floor},
                {"division_degenerate", r.division_degenerate},
                {"checks", checks_json(r.checks())}};
}

json to_json(const ConvergenceReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back(json{{"discrepancy", s.discrepancy}, {"measured", s.measured}, {"budget", s.budget}, {"pass", s.pass}});
    json out{{"kind", to_string(r.kind)}, {"steps", steps}, {"monotone", r.monotone}, {"checks", checks_json(r.checks())}};
    if (r.kind == ConvergenceKind::symbol_p) out["p"] = order_key(r.p);
    return out;
}

json to_json(const CalderonResult& r) {
    json out{{"residual", r.residual},
             {"C_psi", r.c_psi_plus},
             {"band", json{{"low", r.band_low}, {"high", r.band_high}}},
             {"energy_outside_band", r.energy_outside_band},
             {"warning", r.warning}};
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string spectrum_csv(const std::vector<double>& sigma) {
    std::ostringstream os;
    os << "index,sigma\n";
    for (std::size_t k = 0; k < sigma.size(); ++k) os << k << ',' << format_double(sigma[k]) << '\n';
    return os.str();
}

std::string spectrum_csv(const SchattenSpectrum& s) { return spectrum_csv(s.singular_values); }

}  // namespace cframe
