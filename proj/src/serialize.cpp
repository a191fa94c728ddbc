#include "serialize.hpp"

#include "errors.hpp"

namespace bmp {

json multipacking_to_json(const Multipacking& p) {
    return json{{"multipacking", p.members}};
}

json broadcast_to_json(const Broadcast& f) {
    json powers = json::object();
    for (auto [v, r] : f.powers) powers[std::to_string(v)] = r;
    return json{{"broadcast", powers}};
}

Multipacking multipacking_from_json(const json& j) {
    if (!j.is_object() || !j.contains("multipacking") || !j["multipacking"].is_array())
        throw ParseError("certificate must be {\"multipacking\":[...]}");
    std::vector<int> members;
    for (const auto& e : j["multipacking"]) {
        if (!e.is_number_integer()) throw ParseError("multipacking members must be integers");
        members.push_back(e.get<int>());
    }
    return Multipacking::of(std::move(members));
}

Broadcast broadcast_from_json(const json& j) {
    if (!j.is_object() || !j.contains("broadcast") || !j["broadcast"].is_object())
        throw ParseError("certificate must be {\"broadcast\":{\"v\":power,...}}");
    Broadcast f;
    for (const auto& [key, val] : j["broadcast"].items()) {
        if (!val.is_number_integer()) throw ParseError("broadcast powers must be integers");
        int v;
        try {
            v = std::stoi(key);
        } catch (const std::exception&) {
            throw ParseError("broadcast keys must be vertex indices, got \"" + key + "\"");
        }
        f.powers[v] = val.get<int>();
    }
    return f;
}

json violation_to_json(const Violation& v) {
    return json{
        {"kind", v.kind == ViolationKind::BallOverfull ? "ball-overfull" : "uncovered"},
        {"center", v.center},
        {"radius", v.radius},
        {"witness", v.witness},
    };
}

json verdict_to_json(const std::optional<Violation>& v) {
    if (!v) return json{{"ok", true}};
    return json{{"ok", false}, {"violation", violation_to_json(*v)}};
}

namespace {

json result_to_json(const char* parameter, int value, json witness, const SolveStats& stats) {
    return json{
        {"parameter", parameter},
        {"value", value},
        {"witness", std::move(witness)},
        {"nodes", stats.nodes},
        {"millis", stats.elapsed.count()},
    };
}

} // namespace

json mp_result_to_json(const MpResult& r) {
    return result_to_json("mp", r.value, multipacking_to_json(r.witness)["multipacking"], r.stats);
}

json gb_result_to_json(const GbResult& r) {
    return result_to_json("gb", r.value, broadcast_to_json(r.witness)["broadcast"], r.stats);
}

json trace_to_json(const ConstructionTrace& t) {
    return json{
        {"P1", t.p1},
        {"P2", t.p2},
        {"k", t.k},
        {"k_prime", t.k_prime},
        {"alpha", t.alpha},
        {"beta", t.beta},
        {"fallback", t.fallback_used},
        {"guarantee", t.guarantee},
    };
}

} // namespace bmp
