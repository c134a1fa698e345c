#pragma once

// JSON and CSV forms of the library types. Doubles are written with full
// round-trip precision.

#include <string>

#include <json.hpp>

#include "cframe/controlled.hpp"
#include "cframe/frame.hpp"
#include "cframe/multiplier.hpp"
#include "cframe/tf_frames.hpp"

namespace cframe {

using json = nlohmann::json;

/// {"points": [[...]...], "weights": [...]}
json to_json(const MeasureSpace& space);
MeasureSpace space_from_json(const json& j);

/// {"re": [...], "im": [...]}
json to_json(const Symbol& m);
Symbol symbol_from_json(const json& j, const MeasureSpace& space);

/// {"d": d, "re": [[...]], "im": [[...]]}, rows are output indices.
json to_json(const Operator& t);
Operator operator_from_json(const json& j);

/// {"space": ..., "d": d, "re": [[...]], "im": [[...]]}; the arrays hold
/// one row per space point (column F(omega_j) of the frame).
json to_json(const SampledFrame& f);
SampledFrame frame_from_json(const json& j);
SampledFrame frame_from_json(const json& j, const MeasureSpace& space);

/// {"kind": "power", "t": 0.5} etc.
json to_json(const ControlSpec& spec);
ControlSpec control_from_json(const json& j);

json to_json(const BudgetReport& r);
json to_json(const CertificateReport& r);
json to_json(const ConvergenceReport& r);
json to_json(const CalderonResult& r);

/// Header "index,sigma", descending singular values.
std::string spectrum_csv(const SchattenSpectrum& s);
std::string spectrum_csv(const std::vector<double>& sigma);

/// Shortest decimal that round-trips.
std::string format_double(double v);

}  // namespace cframe
