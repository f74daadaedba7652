#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vircurv/virasoro.hpp"

namespace vircurv {

enum class CheckStatus { pass, fail, info };

std::string_view to_string(CheckStatus status);

struct Counterexample {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string suite;
    std::string name;
    std::string range;
    CheckStatus status = CheckStatus::pass;
    std::size_t cases = 0;
    std::optional<Counterexample> counterexample;  // set for every fail
    std::string note;                              // info checks only
};

struct VerificationReport {
    std::string suite;
    CentralParams params;
    long max_mode = 0;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;

    bool all_passed() const;
};

/// One case of a sweep: nullopt when the identity holds for case `index`.
using CaseFn = std::function<std::optional<Counterexample>(std::size_t index)>;

/// Runs `cases` cases on up to `threads` workers. The reported counterexample
/// is always the one with the smallest failing index, so the result does not
/// depend on scheduling. A case that throws counts as a failure.
CheckResult run_check(std::string suite, std::string name, std::string range, std::size_t cases, const CaseFn& fn,
                      unsigned threads);

/// Number of indices in [0, cases) for which `pred` holds.
std::size_t count_cases(std::size_t cases, const std::function<bool(std::size_t)>& pred, unsigned threads);

/// Suite names accepted by run_verify, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one identity family (or "all") with sweeps bounded by max_mode.
/// Unknown suite or max_mode < 1 raises UsageError; parameters that fail
/// theta positivity in the range a suite needs raise ParameterError before
/// any check runs.
VerificationReport run_verify(std::string_view suite, const CentralParams& params, long max_mode,
                              unsigned threads = 1);

/// 0 when every check passed, 1 otherwise.
int exit_code(const VerificationReport& report);

} // namespace vircurv
