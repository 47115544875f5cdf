#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gaborpair {

using json = nlohmann::ordered_json;

struct CheckResult {
    std::string check;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    json meta = json::object();
    /// Wall-clock style values are kept out of the JSON so repeated runs
    /// stay byte-identical; the pass verdict still counts.
    bool volatile_value = false;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    void add(std::string name, double value, double tolerance, bool pass,
             json meta = json::object());
    /// Convenience: pass iff |value| <= tolerance.
    void add_abs(std::string name, double value, double tolerance,
                 json meta = json::object());
    void add_volatile(std::string name, double value, double tolerance, bool pass);
    bool all_pass() const;
    json to_json() const;
};

} // namespace gaborpair
