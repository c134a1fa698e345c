#include "cframe/report.hpp"

#include <cmath>

namespace cframe {

Check bounded_check(std::string id, std::string anchor, double measured, double budget, double tolerance) {
    Check c;
    c.check_id = std::move(id);
    c.theorem_anchor = std::move(anchor);
    c.measured = measured;
    c.budget = budget;
    c.tolerance = tolerance;
    c.pass = std::isfinite(measured) && measured <= budget + tolerance;
    return c;
}

nlohmann::json to_json(const Check& c) {
    nlohmann::json j{{"check_id", c.check_id},
                     {"theorem_anchor", c.theorem_anchor},
                     {"measured", c.measured},
                     {"budget", c.budget},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}};
    if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
    return j;
}

Check check_from_json(const nlohmann::json& j) {
    Check c;
    c.check_id = j.at("check_id").get<std::string>();
    c.theorem_anchor = j.at("theorem_anchor").get<std::string>();
    c.measured = j.at("measured").get<double>();
    c.budget = j.at("budget").get<double>();
    c.tolerance = j.at("tolerance").get<double>();
    c.pass = j.at("pass").get<bool>();
    if (j.contains("diagnostic")) c.diagnostic = j.at("diagnostic").get<std::string>();
    return c;
}

}  // namespace cframe
