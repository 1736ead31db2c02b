#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldh/hypergraph.hpp"

namespace ldh {

// Agreement suites between the exact solver and the closed-form results the
// library implements. Each suite has a default deterministic tuple grid;
// ranges can override the grid where meaningful. Suites are identified by
// the same rule ids the oracle reports ("2.33", "cor-2.11", ...).

struct check_params {
    std::optional<std::pair<int, int>> m_range; // inclusive
    std::optional<std::pair<int, int>> k_range;
    std::optional<std::pair<int, int>> n_range;
    std::optional<std::vector<int>> parts;
    int max_n = 24; // solver cap passed through
};

struct check_result {
    std::string tuple;  // human-readable instance description
    bool pass = false;
    std::string detail; // expected/actual values
};

struct check_report {
    std::string id;
    std::vector<check_result> results;
    bool all_pass() const;
    int failed_count() const;
};

// Throws unknown_theorem for ids outside the table, range_too_large when an
// override would exceed the solver cap or explode the tuple grid.
check_report run_check(const std::string& id, const check_params& params = {});

// Table of known suite ids with one-line descriptions, for --list.
std::vector<std::pair<std::string, std::string>> known_checks();

} // namespace ldh
