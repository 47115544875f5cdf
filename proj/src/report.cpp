#include "gaborpair/report.hpp"

#include <cmath>

namespace gaborpair {

void Report::add(std::string name, double value, double tolerance, bool pass, json meta) {
    checks.push_back({std::move(name), value, tolerance, pass, std::move(meta)});
}

void Report::add_abs(std::string name, double value, double tolerance, json meta) {
    add(std::move(name), value, tolerance, std::abs(value) <= tolerance, std::move(meta));
}

void Report::add_volatile(std::string name, double value, double tolerance, bool pass) {
    checks.push_back({std::move(name), value, tolerance, pass, json::object(), true});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

json Report::to_json() const {
    json arr = json::array();
    for (const auto& c : checks) {
        if (c.volatile_value) {
            arr.push_back(json{{"check", c.check}, {"pass", c.pass}});
            continue;
        }
        arr.push_back(json{{"check", c.check},
                           {"value", c.value},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass},
                           {"meta", c.meta}});
    }
    return json{{"title", title}, {"pass", all_pass()}, {"checks", arr}};
}

} // namespace gaborpair
