#include "chibound/json.hpp"

#include "chibound/errors.hpp"

namespace chibound {

void to_json(Json& j, const Witness& w) {
    j = Json{{"kind", to_string(w.kind)}, {"vertices", w.vertices}};
}

void to_json(Json& j, const MembershipVerdict& v) {
    j = Json{{"member", v.member}};
    j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
}

void to_json(Json& j, const Coloring& c) { j = c.color; }

void to_json(Json& j, const InvariantReport& r) {
    j = Json{{"n", r.n},         {"m", r.m},         {"max_degree", r.max_degree}, {"alpha", r.alpha},
             {"omega", r.omega}, {"chi", r.chi},     {"clique", r.clique},         {"coloring", r.coloring}};
}

void to_json(Json& j, const CliquePartition& p) {
    Json parts = Json::array();
    Json labels = Json::array();
    for (const auto& part : p.parts) {
        parts.push_back(part.vertices);
        labels.push_back("M" + std::to_string(part.label));
    }
    j = Json{{"j", p.part_count()}};
    j["anchor"] = p.anchor ? Json::array({p.anchor->first, p.anchor->second}) : Json(nullptr);
    j["labels"] = std::move(labels);
    j["parts"] = std::move(parts);
}

void to_json(Json& j, const NeighborhoodDecomposition& d) {
    j = Json{{"v", d.v},     {"w", d.w},         {"v_has_max_degree", d.v_has_max_degree},
             {"A", d.a},     {"B", d.b},         {"C", d.c},
             {"A1", d.a1},   {"A2", d.a2},       {"B11", d.b11},
             {"B12", d.b12}, {"B2", d.b2},       {"outside", d.outside}};
}

void to_json(Json& j, const StructureReport& r) {
    j = Json::object();
    for (const auto& c : r.claims) {
        j[std::string(to_string(c.id))] = Json{{"holds", c.holds},
                                               {"derived", is_derived(c.id)},
                                               {"claim", describe(c.id)},
                                               {"counterexample", c.counterexample}};
    }
}

void to_json(Json& j, const BoundCheck& b) {
    j = Json{{"omega", b.omega},         {"chi", b.chi},
             {"max_degree", b.max_degree}, {"bound_floor", b.bound_floor},
             {"reed_value", b.reed_value}, {"bound_ok", b.bound_ok},
             {"rational_ok", b.rational_ok}, {"reed_ok", b.reed_ok},
             {"tight", b.tight}};
}

void to_json(Json& j, const Violation& v) {
    j = Json{{"type", "violation"}, {"check", v.check}, {"graph6", v.graph6}, {"n", v.n}};
    j["anchor"] = v.anchor ? Json::array({v.anchor->first, v.anchor->second}) : Json(nullptr);
    j["counterexample"] = v.counterexample;
    j["bound"] = v.bound;
}

void to_json(Json& j, const ExtremalMember& e) {
    j = Json{{"graph6", e.graph6},           {"n", e.n},         {"omega", e.omega}, {"chi", e.chi},
             {"bound_floor", e.bound_floor}, {"ratio", e.ratio()}};
}

void to_json(Json& j, const OrderStats& s) {
    j = Json{{"n", s.n},
             {"scanned", s.scanned},
             {"three_k1_free", s.three_k1_free},
             {"members", s.members},
             {"tight", s.tight}};
}

void to_json(Json& j, const RemarkRow& r) {
    j = Json{{"type", "remark_row"},
             {"family", r.family},
             {"copies", r.copies},
             {"n", r.n},
             {"graph6", r.graph6},
             {"member", r.verdict.member}};
    j["witness"] = r.verdict.witness ? Json(*r.verdict.witness) : Json(nullptr);
    j["witness_valid"] = r.witness_valid;
    j["three_k1_free"] = r.three_k1_free;
    j["omega"] = r.omega;
    j["chi"] = r.chi;
    j["bound_floor"] = r.bound_floor;
    j["tight"] = r.tight;
}

Witness witness_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("vertices")) {
        throw InvalidInput("witness JSON needs 'kind' and 'vertices'");
    }
    const auto& kind = j.at("kind");
    Witness w;
    if (kind == "3K1") w.kind = WitnessKind::ThreeK1;
    else if (kind == "K1+C4") w.kind = WitnessKind::K1PlusC4;
    else throw InvalidInput("unknown witness kind " + kind.dump());
    try {
        w.vertices = j.at("vertices").get<VertexSet>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("witness vertices: ") + e.what());
    }
    return w;
}

Json summary_json(const CampaignReport& r, bool include_timing) {
    Json j{{"type", "summary"},
           {"scanned", r.scanned},
           {"three_k1_free", r.three_k1_free},
           {"members", r.members},
           {"tight_members", r.tight_members},
           {"engine_checks", r.engine_checks},
           {"engine_disagreements", r.engine_disagreements},
           {"decompositions_checked", r.decompositions_checked},
           {"partitions_checked", r.partitions_checked}};
    Json failures = Json::object();
    for (const auto& name : campaign_check_names()) {
        auto it = r.failures.find(name);
        failures[name] = it == r.failures.end() ? 0 : it->second;
    }
    j["failures"] = std::move(failures);
    j["violations"] = r.violations.size();
    j["extremal"] = r.extremal ? Json(*r.extremal) : Json(nullptr);
    j["by_order"] = r.by_order;
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

}  // namespace chibound
