// Python bindings: a thin, read-mostly view of the workbench. The heavy
// lifting stays in the C++ library; Python gets the builders, exact
// dimension tables, verification suites, and schedules, with JSON strings
// for anything structured.

#include "smw/error.hpp"
#include "smw/groebner.hpp"
#include "smw/invariants.hpp"
#include "smw/json_io.hpp"
#include "smw/presentations.hpp"
#include "smw/strata.hpp"
#include "smw/text.hpp"
#include "smw/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace smw;

namespace {

RingPresentation presentation_by_name(const std::string& name, unsigned n) {
    if (name == "projective_space") return projective_space(n);
    if (name == "grassmannian_lines") return grassmannian_lines(n);
    if (name == "flag_d1") return flag_d1(n);
    if (name == "m01_pn_d2") return m01_pn_d2(n);
    throw Error("unknown ring: " + name);
}

}  // namespace

PYBIND11_MODULE(_stablemaps, m) {
    m.doc() = "exact workbench for rings of genus-zero stable maps";

    py::register_exception<ConventionError>(m, "ConventionError");
    py::register_exception<Error>(m, "WorkbenchError");

    m.def(
        "ring_json",
        [](const std::string& name, unsigned n) {
            return dump_json(presentation_to_json(presentation_by_name(name, n)));
        },
        py::arg("name"), py::arg("n"),
        "Presentation of a named ring as a JSON string.");

    m.def(
        "hilbert",
        [](const std::string& name, unsigned n, unsigned maxDegree) {
            QuotientRing q = QuotientRing::build(presentation_by_name(name, n));
            return hilbert_function(q, maxDegree);
        },
        py::arg("name"), py::arg("n"), py::arg("max_degree"),
        "Exact graded dimensions of a named ring through max_degree.");

    m.def(
        "invariant_hilbert",
        [](unsigned n, unsigned maxDegree) {
            QuotientRing q = QuotientRing::build(m01_pn_d2(n));
            RingAction swap = label_swap_action(q, "D1", "D2");
            return smw::invariant_hilbert(q, swap, maxDegree);
        },
        py::arg("n"), py::arg("max_degree"),
        "Label-swap invariant dimensions of the conic model through max_degree.");

    m.def(
        "schedule_json",
        [](unsigned d, unsigned m_) {
            BlowupSchedule s = m_ == 0 ? schedule_m0(d) : schedule_m(d, m_);
            return dump_json(schedule_to_json(s));
        },
        py::arg("d"), py::arg("m") = 0,
        "Blow-down schedule for degree d with m marked points, as JSON.");

    m.def("suites", [] {
        std::vector<std::string> names;
        for (const auto& [name, desc] : suite_catalog()) names.push_back(name);
        return names;
    });

    m.def(
        "verify",
        [](const std::string& suite, std::optional<unsigned> d, std::optional<unsigned> m_,
           std::optional<unsigned> n, std::optional<unsigned> k) {
            SuiteRequest req{d, m_, n, k};
            VerificationReport rep = run_suite(suite, req);
            py::list rows;
            for (const auto& c : rep.checks) {
                py::dict row;
                row["check"] = c.name;
                row["pass"] = c.verdict;
                if (c.witness) row["witness"] = *c.witness;
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("suite") = "all", py::arg("d") = py::none(), py::arg("m") = py::none(),
        py::arg("n") = py::none(), py::arg("k") = py::none(),
        "Run a verification suite; returns one dict per check.");
}
