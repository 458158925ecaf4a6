#include "smw/json_io.hpp"

#include "smw/order.hpp"
#include "smw/text.hpp"

namespace smw {

namespace {

ordered_json genset_to_json(const GenSetPtr& gs) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < gs->size(); ++i) {
        const Generator& g = (*gs)[i];
        ordered_json item;
        item["name"] = g.name;
        item["degree"] = g.degree;
        arr.push_back(std::move(item));
    }
    return arr;
}

ordered_json order_to_json(const MonomialOrder& order) {
    ordered_json j;
    switch (order.kind()) {
        case MonomialOrder::Kind::GrevLex:
            j["kind"] = "grevlex";
            break;
        case MonomialOrder::Kind::Elimination:
            j["kind"] = "elimination";
            j["eliminated"] = order.eliminated_block();
            break;
    }
    ordered_json priority = ordered_json::array();
    for (std::size_t index : order.priority()) priority.push_back((*order.genset())[index].name);
    j["priority"] = std::move(priority);
    return j;
}

}  // namespace

ordered_json presentation_to_json(const RingPresentation& pres) {
    ordered_json j;
    j["generators"] = genset_to_json(pres.gens);
    ordered_json rels = ordered_json::array();
    for (const Polynomial& r : pres.relations) rels.push_back(to_text(r));
    j["relations"] = std::move(rels);
    j["order"] = order_to_json(MonomialOrder::grevlex(pres.gens));
    ordered_json derived = ordered_json::object();
    for (const auto& [name, poly] : pres.derived) derived[name] = to_text(poly);
    j["derived"] = std::move(derived);
    j["provenance"] = pres.provenance;
    return j;
}

ordered_json quotient_to_json(const QuotientRing& q) {
    ordered_json j;
    j["generators"] = genset_to_json(q.genset());
    ordered_json rels = ordered_json::array();
    for (const Polynomial& r : q.basis().elements) rels.push_back(to_text(r, q.basis().order));
    j["relations"] = std::move(rels);
    j["reduced"] = true;
    j["order"] = order_to_json(q.basis().order);
    j["provenance"] = q.presentation().provenance;
    return j;
}

ordered_json schedule_to_json(const BlowupSchedule& sched) {
    ordered_json j;
    j["d"] = sched.d;
    j["m"] = sched.m;
    ordered_json stages = ordered_json::array();
    for (const ScheduleStage& stage : sched.stages) {
        ordered_json s;
        s["k"] = stage.k;
        s["kind"] = stage.kind;
        s["contracted"] = stage.contracted;
        stages.push_back(std::move(s));
    }
    j["stages"] = std::move(stages);
    return j;
}

ordered_json bundle_to_json(const RelationBundle& bundle) {
    ordered_json j;
    j["name"] = bundle.name;
    j["generators"] = genset_to_json(bundle.gens);
    ordered_json rels = ordered_json::array();
    for (std::size_t i = 0; i < bundle.relations.size(); ++i) {
        ordered_json r;
        r["name"] = bundle.relationNames[i];
        r["text"] = to_text(bundle.relations[i]);
        rels.push_back(std::move(r));
    }
    j["relations"] = std::move(rels);
    ordered_json extras = ordered_json::object();
    for (const auto& [name, poly] : bundle.extras) extras[name] = to_text(poly);
    j["extras"] = std::move(extras);
    j["placeholders"] = bundle.placeholders;
    ordered_json notes = ordered_json::object();
    for (const auto& [key, value] : bundle.notes) notes[key] = value;
    j["notes"] = std::move(notes);
    j["provenance"] = bundle.provenance;
    return j;
}

ordered_json report_to_json(const VerificationReport& report, bool withTimings) {
    ordered_json arr = ordered_json::array();
    for (const CheckResult& row : report.checks) {
        ordered_json r;
        r["check"] = row.name;
        r["status"] = row.verdict ? "pass" : "fail";
        if (row.witness) r["witness"] = *row.witness;
        if (withTimings) r["ms"] = row.ms;
        arr.push_back(std::move(r));
    }
    return arr;
}

ordered_json hilbert_to_json(const std::string& ringDescription,
                             const std::vector<unsigned long>& dims) {
    ordered_json j;
    j["ring"] = ringDescription;
    j["hilbert"] = dims;
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace smw
