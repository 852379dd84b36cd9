#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mldeg/tracker.hpp"

namespace mldeg {

struct SelfTestCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // what was measured, whether it passed or not
};

struct SelfTestReport {
    bool all_passed = false;
    std::vector<SelfTestCheck> checks;
};

// Deterministic end-to-end battery over fixtures with independently known
// answers: a plain polynomial solve, the linear-model closed form, a curve
// count, the smallest family member, and a deliberately corrupted corrector
// tolerance that the step-residual bookkeeping must flag.
SelfTestReport run_selftest(const TrackerConfig& config);

nlohmann::json report_to_json(const SelfTestReport& report);

}  // namespace mldeg
