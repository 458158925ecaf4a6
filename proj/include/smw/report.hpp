#pragma once
// Structured pass/fail reports for verification suites. Every check keeps
// the statement it reduced and, on failure, the nonzero residue as a
// printable witness — a report is reproducible evidence, not just a flag.

#include <optional>
#include <string>
#include <vector>

namespace smw {

struct CheckResult {
    std::string name;       ///< stable identifier, e.g. "side-square:1"
    std::string statement;  ///< human-readable form of what was reduced
    bool verdict = false;   ///< true iff the witness is absent
    std::optional<std::string> witness;  ///< nonzero residue, printed exactly
    double ms = 0.0;        ///< wall time spent on this check
};

/// A named list of checks. The invariant "verdict == !witness" is
/// maintained by building rows through `make_check`.
struct VerificationReport {
    std::string title;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failed_count() const;
    void add(CheckResult row) { checks.push_back(std::move(row)); }
};

/// Builds one row; the verdict is derived from the witness, never passed.
CheckResult make_check(std::string name, std::string statement,
                       std::optional<std::string> witness, double ms = 0.0);

/// Fixed-width text table (one row per check) for terminal output.
/// Deterministic for a fixed report; timings are shown only on request.
std::string render_table(const VerificationReport& report, bool withTimings = false);

}  // namespace smw
