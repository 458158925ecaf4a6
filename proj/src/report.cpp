#include "smw/report.hpp"

#include <algorithm>
#include <cstdio>

namespace smw {

bool VerificationReport::all_pass() const {
    return failed_count() == 0;
}

std::size_t VerificationReport::failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.verdict) ++n;
    return n;
}

CheckResult make_check(std::string name, std::string statement,
                       std::optional<std::string> witness, double ms) {
    CheckResult row;
    row.name = std::move(name);
    row.statement = std::move(statement);
    row.witness = std::move(witness);
    row.verdict = !row.witness.has_value();
    row.ms = ms;
    return row;
}

std::string render_table(const VerificationReport& report, bool withTimings) {
    std::size_t nameWidth = 5;
    for (const auto& c : report.checks) nameWidth = std::max(nameWidth, c.name.size());

    std::string out;
    out += report.title;
    out += "\n";
    for (const auto& c : report.checks) {
        out += "  ";
        out += c.name;
        out.append(nameWidth - c.name.size() + 2, ' ');
        out += c.verdict ? "pass" : "FAIL";
        if (withTimings) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "  %8.2f ms", c.ms);
            out += buf;
        }
        if (!c.verdict && c.witness) {
            out += "  residue: ";
            out += *c.witness;
        }
        out += "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "  %zu/%zu checks pass\n",
                  report.checks.size() - report.failed_count(), report.checks.size());
    out += buf;
    return out;
}

}  // namespace smw
