#pragma once

// The identity registry: every numbered statement runs as a deterministic
// pass/fail check with a concrete witness on failure.  Conjectural checks
// are flagged; they report evidence and never gate an exit status.

#include <optional>
#include <string>
#include <vector>

#include "narayana/numeric.hpp"

namespace narayana {

enum class CheckStatus { Pass, Fail, BudgetExceeded };

struct Verdict {
    CheckStatus status = CheckStatus::Pass;
    std::string id;
    std::string range;    // the ranges actually exercised
    std::string witness;  // non-empty whenever status != Pass
    long elapsed_ms = 0;
    bool conjectural = false;
};

struct CheckInfo {
    std::string id;
    std::string summary;
    std::string default_range;
    bool conjectural = false;
};

struct Overrides {
    std::optional<long> n_max;
    std::optional<long> m_max;
    std::optional<long> order;
};

// throws UnknownIdentity for unregistered ids
Verdict run_check(const std::string& id, const Overrides& overrides = {});
std::vector<CheckInfo> list_checks();
bool is_registered(const std::string& id);

// the three parameterized harnesses, also reachable through run_check
Verdict corollary_2_26(long m_max, long n_max);
Verdict conjecture_1(long m_max, long n_max);
Verdict delannoy_div3(long n_max);

}  // namespace narayana
