#pragma once
// JSON export for every artifact the workbench produces: ring presentations,
// reduced bases, blow-down schedules, relation bundles, Hilbert vectors, and
// verification reports. All emitters use ordered JSON with canonical member
// order so that equal inputs serialize to byte-identical text.

#include "smw/groebner.hpp"
#include "smw/presentation.hpp"
#include "smw/presentations.hpp"
#include "smw/report.hpp"
#include "smw/strata.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace smw {

using ordered_json = nlohmann::ordered_json;

/// {"generators": [{"name", "degree"}...], "relations": [canonical text...],
///  "order": {"kind", "priority"}, "derived": {name: text...}, "provenance"}.
/// The order block describes the default declaration-order grevlex under
/// which the quotient of this presentation is built.
ordered_json presentation_to_json(const RingPresentation& pres);

/// The same schema over the quotient's generators, with the reduced basis
/// in the relations array and a "reduced": true marker after it.
ordered_json quotient_to_json(const QuotientRing& q);

/// {"d", "m", "stages": [{"k", "kind", "contracted": [label text...]}...]}.
ordered_json schedule_to_json(const BlowupSchedule& sched);

/// {"name", "generators", "relations": [{"name", "text"}...],
///  "extras": {name: text}, "placeholders": [...], "notes": {...},
///  "provenance"}.
ordered_json bundle_to_json(const RelationBundle& bundle);

/// JSON array [{"check", "status", "witness"?, "ms"?}, ...]. "witness" is
/// present exactly on failing rows; "ms" only when withTimings is set, so
/// that default reports are byte-stable across runs.
ordered_json report_to_json(const VerificationReport& report, bool withTimings = false);

/// {"ring": <provenance string>, "hilbert": [dims...]}.
ordered_json hilbert_to_json(const std::string& ringDescription,
                             const std::vector<unsigned long>& dims);

/// Serializes with two-space indentation and a trailing newline — the one
/// textual form used everywhere (files, stdout), keeping outputs comparable.
std::string dump_json(const ordered_json& j);

}  // namespace smw
