#include "smw/cli.hpp"

#include "smw/error.hpp"
#include "smw/invariants.hpp"
#include "smw/json_io.hpp"
#include "smw/presentations.hpp"
#include "smw/strata.hpp"
#include "smw/text.hpp"
#include "smw/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace smw::cli {

namespace {

struct Flags {
    std::optional<unsigned> d, m, n, k;
    std::string format = "table";
    std::string outPath;
    bool timings = false;
    bool list = false;
    std::string target;
    std::string suite;
};

/// Writes the rendered result: to --out when given (stdout stays silent),
/// to the output stream otherwise. Returns `code`, or 2 when the file
/// cannot be opened.
int emit(const std::string& rendered, const Flags& f, std::ostream& out, std::ostream& err,
         int code) {
    if (!f.outPath.empty()) {
        std::ofstream file(f.outPath, std::ios::binary);
        if (!file) {
            err << "cannot open output file: " << f.outPath << "\n";
            return 2;
        }
        file << rendered;
        return code;
    }
    out << rendered;
    return code;
}

// ---------------------------------------------------------------------------
// Text renderings (the JSON ones live in json_io).

std::string presentation_table(const RingPresentation& p) {
    std::ostringstream t;
    t << "ring " << p.provenance << "\n";
    t << "generators:\n";
    for (std::size_t i = 0; i < p.gens->size(); ++i)
        t << "  " << (*p.gens)[i].name << "  degree " << (*p.gens)[i].degree << "\n";
    t << "relations:\n";
    for (const Polynomial& r : p.relations) t << "  " << to_text(r) << "\n";
    if (!p.derived.empty()) {
        t << "derived classes:\n";
        for (const auto& [name, value] : p.derived)
            t << "  " << name << " = " << to_text(value) << "\n";
    }
    return t.str();
}

std::string bundle_table(const RelationBundle& b) {
    std::ostringstream t;
    t << "bundle " << b.provenance << "\n";
    t << "generators:\n";
    for (std::size_t i = 0; i < b.gens->size(); ++i)
        t << "  " << (*b.gens)[i].name << "  degree " << (*b.gens)[i].degree << "\n";
    t << "relations:\n";
    for (std::size_t i = 0; i < b.relations.size(); ++i)
        t << "  " << b.relationNames[i] << " = " << to_text(b.relations[i]) << "\n";
    if (!b.extras.empty()) {
        t << "extras:\n";
        for (const auto& [name, value] : b.extras)
            t << "  " << name << " = " << to_text(value) << "\n";
    }
    for (const auto& ph : b.placeholders) t << "not computed: " << ph << "\n";
    for (const auto& [key, note] : b.notes) t << "note " << key << ": " << note << "\n";
    return t.str();
}

std::string schedule_table(const BlowupSchedule& s) {
    std::ostringstream t;
    t << "schedule d=" << s.d << " m=" << s.m << "\n";
    for (const auto& st : s.stages) {
        t << "stage " << st.k << "  " << st.kind;
        if (!st.contracted.empty()) {
            t << "  contracts " << st.contracted.size() << ":";
            for (const auto& label : st.contracted) t << " " << label;
        }
        t << "\n";
    }
    return t.str();
}

std::string hilbert_table(const std::string& ring, const std::vector<unsigned long>& dims) {
    std::ostringstream t;
    t << "hilbert " << ring << "\n";
    for (std::size_t i = 0; i < dims.size(); ++i) t << "  " << i << ": " << dims[i] << "\n";
    return t.str();
}

std::string suite_list_table() {
    std::ostringstream t;
    std::size_t width = 0;
    for (const auto& [name, desc] : suite_catalog()) width = std::max(width, name.size());
    for (const auto& [name, desc] : suite_catalog())
        t << name << std::string(width - name.size() + 2, ' ') << desc << "\n";
    return t.str();
}

ordered_json suite_list_json() {
    ordered_json arr = ordered_json::array();
    for (const auto& [name, desc] : suite_catalog()) {
        ordered_json item;
        item["suite"] = name;
        item["description"] = desc;
        arr.push_back(std::move(item));
    }
    return arr;
}

// ---------------------------------------------------------------------------
// Verbs.

struct BuildTarget {
    std::string name;
    std::string flags;
    std::string description;
};

const std::vector<BuildTarget>& build_targets() {
    static const std::vector<BuildTarget> targets = {
        {"projective_space", "--n", "cohomology of n-dimensional projective space"},
        {"grassmannian_lines", "--n", "cohomology of the lines-in-projective-n-space variety"},
        {"flag_d1", "--n", "one-pointed degree-one stable-map ring over n-space"},
        {"m01_pn_d2", "--n", "one-pointed degree-two stable-map ring over n-space"},
        {"thm33_relations", "--d --n", "one-sided boundary relation bundle"},
        {"thm_m_relations", "--d --m", "marked-tower relation bundle"},
        {"psi_sum_relations", "--d --m --k", "cotangent-sum relations at one tower stage"},
    };
    return targets;
}

/// Reports a missing required flag as a usage error.
bool require_flag(const std::optional<unsigned>& value, const std::string& verb,
                  const std::string& target, const std::string& flag, std::ostream& err) {
    if (value) return true;
    err << verb << (target.empty() ? "" : " " + target) << " requires " << flag << "\n";
    return false;
}

int do_build(const Flags& f, std::ostream& out, std::ostream& err) {
    bool json = f.format == "json";
    if (f.list) {
        if (json) {
            ordered_json arr = ordered_json::array();
            for (const auto& t : build_targets()) {
                ordered_json item;
                item["target"] = t.name;
                item["flags"] = t.flags;
                item["description"] = t.description;
                arr.push_back(std::move(item));
            }
            return emit(dump_json(arr), f, out, err, 0);
        }
        std::ostringstream t;
        for (const auto& bt : build_targets())
            t << bt.name << "  (" << bt.flags << ")  " << bt.description << "\n";
        return emit(t.str(), f, out, err, 0);
    }
    if (f.target.empty()) {
        err << "build requires a target (see `build --list`)\n";
        return 2;
    }
    const std::string& t = f.target;
    if (t == "projective_space" || t == "grassmannian_lines" || t == "flag_d1" ||
        t == "m01_pn_d2") {
        if (!require_flag(f.n, "build", t, "--n", err)) return 2;
        RingPresentation p;
        if (t == "projective_space") p = projective_space(*f.n);
        if (t == "grassmannian_lines") p = grassmannian_lines(*f.n);
        if (t == "flag_d1") p = flag_d1(*f.n);
        if (t == "m01_pn_d2") p = m01_pn_d2(*f.n);
        std::string rendered =
            json ? dump_json(presentation_to_json(p)) : presentation_table(p);
        return emit(rendered, f, out, err, 0);
    }
    RelationBundle b;
    if (t == "thm33_relations") {
        if (!require_flag(f.d, "build", t, "--d", err)) return 2;
        if (!require_flag(f.n, "build", t, "--n", err)) return 2;
        b = thm33_relations(*f.d, *f.n, default_I(*f.d));
    } else if (t == "thm_m_relations") {
        if (!require_flag(f.d, "build", t, "--d", err)) return 2;
        if (!require_flag(f.m, "build", t, "--m", err)) return 2;
        b = thm_m_relations(*f.d, *f.m);
    } else if (t == "psi_sum_relations") {
        if (!require_flag(f.d, "build", t, "--d", err)) return 2;
        if (!require_flag(f.m, "build", t, "--m", err)) return 2;
        if (!require_flag(f.k, "build", t, "--k", err)) return 2;
        b = psi_sum_relations(*f.d, *f.m, *f.k);
    } else {
        err << "unknown build target: " << t << " (see `build --list`)\n";
        return 2;
    }
    std::string rendered = json ? dump_json(bundle_to_json(b)) : bundle_table(b);
    return emit(rendered, f, out, err, 0);
}

int do_hilbert(const Flags& f, std::ostream& out, std::ostream& err) {
    if (f.target.empty()) {
        err << "hilbert requires a ring target\n";
        return 2;
    }
    const std::string& t = f.target;
    RingPresentation p;
    unsigned top = 0;
    if (t == "projective_space") {
        if (!require_flag(f.n, "hilbert", t, "--n", err)) return 2;
        p = projective_space(*f.n);
        top = *f.n;
    } else if (t == "grassmannian_lines") {
        if (!require_flag(f.n, "hilbert", t, "--n", err)) return 2;
        p = grassmannian_lines(*f.n);
        top = 2 * (*f.n - 1);
    } else if (t == "flag_d1") {
        if (!require_flag(f.n, "hilbert", t, "--n", err)) return 2;
        p = flag_d1(*f.n);
        top = 2 * *f.n - 1;
    } else if (t == "m01_pn_d2") {
        if (!require_flag(f.n, "hilbert", t, "--n", err)) return 2;
        p = m01_pn_d2(*f.n);
        top = 3 * *f.n;
    } else {
        err << "unknown hilbert target: " << t << "\n";
        return 2;
    }
    unsigned maxDegree = f.k ? *f.k : top;
    QuotientRing q = QuotientRing::build(p);
    std::vector<unsigned long> dims = hilbert_function(q, maxDegree);
    std::string rendered = f.format == "json" ? dump_json(hilbert_to_json(p.provenance, dims))
                                              : hilbert_table(p.provenance, dims);
    return emit(rendered, f, out, err, 0);
}

int do_verify(const Flags& f, std::ostream& out, std::ostream& err) {
    bool json = f.format == "json";
    if (f.list) {
        std::string rendered = json ? dump_json(suite_list_json()) : suite_list_table();
        return emit(rendered, f, out, err, 0);
    }
    std::string suite = f.suite.empty() ? "all" : f.suite;
    SuiteRequest req{f.d, f.m, f.n, f.k};
    VerificationReport rep = run_suite(suite, req);
    std::string rendered = json ? dump_json(report_to_json(rep, f.timings))
                                : render_table(rep, f.timings);
    return emit(rendered, f, out, err, rep.all_pass() ? 0 : 1);
}

int do_schedule(const Flags& f, std::ostream& out, std::ostream& err) {
    if (!require_flag(f.d, "schedule", "", "--d", err)) return 2;
    unsigned m = f.m.value_or(0);
    BlowupSchedule s = m == 0 ? schedule_m0(*f.d) : schedule_m(*f.d, m);
    std::string rendered =
        f.format == "json" ? dump_json(schedule_to_json(s)) : schedule_table(s);
    return emit(rendered, f, out, err, 0);
}

int do_invariants(const Flags& f, std::ostream& out, std::ostream& err) {
    if (!require_flag(f.n, "invariants", "", "--n", err)) return 2;
    unsigned maxDegree = f.k ? *f.k : 3 * *f.n;
    QuotientRing q = QuotientRing::build(m01_pn_d2(*f.n));
    RingAction swap = label_swap_action(q, "D1", "D2");
    std::vector<unsigned long> dims = invariant_hilbert(q, swap, maxDegree);
    std::string ring = q.presentation().provenance + " label-swap invariants";
    std::string rendered = f.format == "json" ? dump_json(hilbert_to_json(ring, dims))
                                              : hilbert_table(ring, dims);
    return emit(rendered, f, out, err, 0);
}

void add_common(CLI::App* sub, Flags& f, bool withDims, bool withTimings) {
    if (withDims) {
        sub->add_option("--d", f.d, "map degree");
        sub->add_option("--m", f.m, "number of marked points");
        sub->add_option("--n", f.n, "target projective dimension");
        sub->add_option("--k", f.k, "stage / truncation degree");
    }
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    sub->add_option("--out", f.outPath, "write the result to this file instead of stdout");
    if (withTimings)
        sub->add_flag("--timings", f.timings, "include wall-time per check (non-deterministic)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"exact workbench for rings of genus-zero stable maps", "smw"};
    app.require_subcommand(0, 1);

    CLI::App* build = app.add_subcommand("build", "emit a ring presentation or relation bundle");
    build->add_option("target", f.target, "what to build (see --list)");
    build->add_flag("--list", f.list, "list the available targets");
    add_common(build, f, true, false);

    CLI::App* hilbert =
        app.add_subcommand("hilbert", "graded dimensions of a ring, exactly");
    hilbert->add_option("target", f.target, "which ring");
    add_common(hilbert, f, true, false);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", f.suite, "suite name (default: all)");
    verify->add_flag("--list", f.list, "list the available suites");
    add_common(verify, f, true, true);

    CLI::App* schedule =
        app.add_subcommand("schedule", "stages of the boundary blow-down tower");
    add_common(schedule, f, true, false);

    CLI::App* invariants =
        app.add_subcommand("invariants", "label-swap invariant dimensions of the conic model");
    add_common(invariants, f, true, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(build)) return do_build(f, out, err);
        if (app.got_subcommand(hilbert)) return do_hilbert(f, out, err);
        if (app.got_subcommand(verify)) return do_verify(f, out, err);
        if (app.got_subcommand(schedule)) return do_schedule(f, out, err);
        if (app.got_subcommand(invariants)) return do_invariants(f, out, err);
    } catch (const ConventionError& e) {
        err << "convention pinning failed: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no command given (try --help)\n";
    return 2;
}

}  // namespace smw::cli
