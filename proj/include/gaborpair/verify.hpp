#pragma once

#include <string>
#include <vector>

#include "gaborpair/report.hpp"

namespace gaborpair {

/// One acceptance criterion: named checks plus a wall-clock budget where the
/// suite pins one.
struct Criterion {
    int id = 0;
    std::string name;
    Report report;
    double seconds = 0.0;
    bool pass = false;
};

Criterion verify_zak_unitarity();     // 1
Criterion verify_zak_zero_blowup();   // 2
Criterion verify_theta_suite();       // 3
Criterion verify_kernel_suite();      // 4
Criterion verify_example4();          // 5
Criterion verify_bastiaans_pair();    // 6
Criterion verify_xi0();               // 7
Criterion verify_hg_suite();          // 8
Criterion verify_contrast();          // 9
Criterion verify_weak_identity();     // 10

std::vector<Criterion> verify_all();
std::vector<Criterion> verify_group(const std::string& group);

json criteria_json(const std::vector<Criterion>& criteria);

} // namespace gaborpair
