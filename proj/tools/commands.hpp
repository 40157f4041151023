#pragma once

#include <cstdint>
#include <string>

#include "dedekind/rational.hpp"

namespace dedekind::cli {

/// The two-column sum/difference table, computed from the arithmetic on
/// every call (never hard-coded), so regressions show up in golden tests.
std::string tables_text();

struct OracleOptions {
    unsigned trials = 200;
    std::uint64_t seed = 42;
    Rational bound = Rational(4);
    long denom = 8;
    bool inject_fault = false; // test hook: corrupt one law on purpose
};

struct OracleOutcome {
    bool ok;
    std::string report;
};

/// Runs the randomized law suite against the grid oracles and the symbolic
/// model. Deterministic for a fixed seed; the report carries per-law pass
/// counts and, on failure, the offending instance.
OracleOutcome run_oracle(const OracleOptions& options);

/// Full command-line entry point. Exit codes: 0 success, 1 check failure,
/// 2 usage or parse error.
int run_cli(int argc, char** argv);

} // namespace dedekind::cli
