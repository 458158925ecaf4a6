#pragma once
// Named verification suites: each one re-derives a family of exact
// identities (ring reductions, coefficient values, schedule combinatorics,
// engine soundness properties) and reports one pass/fail row per check.
// The suites are the CLI's `verify` back end and the CI matrix.

#include "smw/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smw {

/// Narrowing parameters for a suite run. A pinned value replaces the
/// matching default grid dimension in every check family that supports it;
/// families that cannot honor a pin contribute no rows. Unpinned
/// dimensions keep their default grids.
struct SuiteRequest {
    std::optional<unsigned> d;
    std::optional<unsigned> m;
    std::optional<unsigned> n;
    std::optional<unsigned> k;
};

/// {name, one-line description} for every runnable suite, in canonical
/// order, ending with the aggregate "all".
const std::vector<std::pair<std::string, std::string>>& suite_catalog();

/// True iff `name` appears in suite_catalog().
bool is_suite(const std::string& name);

/// Runs one suite and returns its report; "all" concatenates every other
/// suite in catalog order. Check names, order, and content depend only on
/// the request, never on timing. Throws Error for unknown suite names;
/// ConventionError propagates from model construction.
VerificationReport run_suite(const std::string& name, const SuiteRequest& req = {});

}  // namespace smw
