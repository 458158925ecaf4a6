#pragma once
// A finitely presented graded ring: named graded generators, homogeneous
// relation polynomials, and an optional dictionary of derived classes
// expressed in the generators.

#include "smw/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace smw {

struct RingPresentation {
    GenSetPtr gens;
    std::vector<Polynomial> relations;
    std::map<std::string, Polynomial> derived;
    std::string provenance;  // builder call that produced this presentation

    const Polynomial& derived_class(const std::string& name) const;
};

/// Checks the presentation invariants: relations homogeneous and over the
/// presentation's generator set; derived entries homogeneous. Throws Error.
void validate(const RingPresentation& p);

}  // namespace smw
