#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cframe {

/// One verified statement: measured value against a budget or expected value.
struct Check {
    std::string check_id;
    std::string theorem_anchor;
    double measured = 0.0;
    double budget = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string diagnostic;
};

/// measured <= budget + tolerance.
Check bounded_check(std::string id, std::string anchor, double measured, double budget, double tolerance);

nlohmann::json to_json(const Check& c);
Check check_from_json(const nlohmann::json& j);

}  // namespace cframe
