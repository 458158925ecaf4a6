#include "smw/presentation.hpp"
#include "smw/text.hpp"

namespace smw {

const Polynomial& RingPresentation::derived_class(const std::string& name) const {
    auto it = derived.find(name);
    if (it == derived.end()) throw Error("no derived class named " + name);
    return it->second;
}

void validate(const RingPresentation& p) {
    if (!p.gens) throw Error("presentation without a generator set");
    Polynomial probe = Polynomial::zero(p.gens);
    for (const auto& r : p.relations) {
        r.require_same_genset(probe);
        if (!r.is_homogeneous())
            throw Error("inhomogeneous relation: " + to_text(r));
    }
    for (const auto& [name, d] : p.derived) {
        d.require_same_genset(probe);
        if (!d.is_homogeneous())
            throw Error("inhomogeneous derived class: " + name);
    }
}

}  // namespace smw
