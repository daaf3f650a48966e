#pragma once

#include <string>
#include <utility>
#include <vector>

namespace scalsup {

enum class CheckMethod {
    structural,
    pairwise_reduction,
    twin_check,
    bounded_oracle,
    exact,
};

const char* to_string(CheckMethod m);

/// Outcome of one sufficient-condition check. A witness is attached iff the
/// condition fails and the method is not structural.
struct ConditionVerdict {
    std::string name;
    bool holds = true;
    CheckMethod method = CheckMethod::structural;
    /// Named parts of the counterexample, e.g. {"s", "121.111"}.
    std::vector<std::pair<std::string, std::string>> witness;
    /// Sub-results reported alongside the main verdict.
    std::vector<std::pair<std::string, bool>> details;
    std::string note;
};

} // namespace scalsup
