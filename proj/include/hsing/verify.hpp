#pragma once

// Self-check batteries: each suite cross-checks library results against
// independent formulas or constructions and returns pass/fail per invariant
// with counterexample payloads.

#include "hsing/report.hpp"

#include <string>
#include <vector>

namespace hsing {

const std::vector<std::string>& suite_names();  // groups, counts, quiver, mf, orbit, partitions, ghost, knoerrer

/// {"suite", "passed", "checks": [{"name", "passed", "cases", "counterexamples"}]}.
/// "all" runs every suite concurrently. Throws std::invalid_argument on an unknown suite.
Json run_suite(const std::string& suite, const Config& cfg);

}  // namespace hsing
