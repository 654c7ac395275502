#include "mhg/json_io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mhg {

namespace {

nlohmann::json value_json(int v) {
    if (is_inf(v)) return "inf";
    return v;
}

int value_from_json(const nlohmann::json& j, const char* field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw Error(ErrorCode::Malformed, std::string(field) + " must be an integer or \"inf\"");
    }
    if (!j.is_number_integer())
        throw Error(ErrorCode::Malformed, std::string(field) + " must be an integer or \"inf\"");
    long long v = j.get<long long>();
    if (v < 0 || v > kInf)
        throw Error(ErrorCode::Malformed, std::string(field) + " out of range");
    return static_cast<int>(v);
}

} // namespace

nlohmann::json to_json(const ParameterSet& p) {
    nlohmann::json j;
    j["delta"] = value_json(p.delta);
    j["k1"] = value_json(p.k1);
    j["k2"] = value_json(p.k2);
    j["c0"] = value_json(p.c0);
    j["c1"] = value_json(p.c1);
    nlohmann::json henson = nlohmann::json::array();
    for (const HensonConstraint& h : p.henson) {
        if (h.companion) {
            nlohmann::json entry;
            entry["companion"] = h.clique_sizes;
            henson.push_back(entry);
        } else {
            henson.push_back(h.clique_sizes);
        }
    }
    j["henson"] = henson;
    return j;
}

ParameterSet parameter_set_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Malformed, "parameter set must be an object");
    for (const char* field : {"delta", "k1", "k2", "c0", "c1"})
        if (!j.contains(field))
            throw Error(ErrorCode::Malformed, std::string("missing field ") + field);
    ParameterSet p;
    p.delta = value_from_json(j.at("delta"), "delta");
    p.k1 = value_from_json(j.at("k1"), "k1");
    p.k2 = value_from_json(j.at("k2"), "k2");
    p.c0 = value_from_json(j.at("c0"), "c0");
    p.c1 = value_from_json(j.at("c1"), "c1");
    if (j.contains("henson")) {
        const nlohmann::json& hs = j.at("henson");
        if (!hs.is_array()) throw Error(ErrorCode::Malformed, "henson must be an array");
        for (const nlohmann::json& entry : hs) {
            HensonConstraint h;
            const nlohmann::json* sizes = &entry;
            if (entry.is_object()) {
                if (!entry.contains("companion"))
                    throw Error(ErrorCode::Malformed, "henson object needs a companion list");
                h.companion = true;
                sizes = &entry.at("companion");
            }
            if (!sizes->is_array() || sizes->empty())
                throw Error(ErrorCode::Malformed, "henson constraint must be a non-empty list");
            for (const nlohmann::json& s : *sizes) {
                if (!s.is_number_integer() || s.get<long long>() < 1)
                    throw Error(ErrorCode::Malformed, "henson part sizes must be positive integers");
                h.clique_sizes.push_back(s.get<int>());
            }
            if (!std::is_sorted(h.clique_sizes.begin(), h.clique_sizes.end(),
                                std::greater<int>()))
                throw Error(ErrorCode::Malformed, "henson part sizes must be non-increasing");
            if (h.companion && h.clique_sizes.size() != 2)
                throw Error(ErrorCode::Malformed, "companion constraints have exactly two parts");
            p.henson.push_back(std::move(h));
        }
    }
    return p;
}

nlohmann::json to_json(const EdgeLabelledGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.n;
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v, g.get(u, v)});
    j["edges"] = edges;
    return j;
}

EdgeLabelledGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error(ErrorCode::Malformed, "graph needs vertices and edges fields");
    const nlohmann::json& nv = j.at("vertices");
    if (!nv.is_number_integer() || nv.get<long long>() < 0 || nv.get<long long>() > 4096)
        throw Error(ErrorCode::Malformed, "vertices must be a small non-negative integer");
    EdgeLabelledGraph g(nv.get<int>());
    const nlohmann::json& edges = j.at("edges");
    if (!edges.is_array()) throw Error(ErrorCode::Malformed, "edges must be an array");
    for (const nlohmann::json& e : edges) {
        if (!e.is_array() || e.size() != 3)
            throw Error(ErrorCode::Malformed, "each edge must be [u, v, dist]");
        for (const nlohmann::json& x : e)
            if (!x.is_number_integer())
                throw Error(ErrorCode::Malformed, "edge entries must be integers");
        int u = e[0].get<int>(), v = e[1].get<int>(), d = e[2].get<int>();
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw Error(ErrorCode::Malformed, "edge endpoints out of range");
        if (d < 1) throw Error(ErrorCode::Malformed, "edge distances must be positive");
        if (g.has_edge(u, v)) throw Error(ErrorCode::Malformed, "duplicate edge");
        g.set_edge(u, v, d);
    }
    return g;
}

nlohmann::json to_json(const AdmissibilityVerdict& v) {
    nlohmann::json j;
    j["acceptable"] = v.acceptable;
    j["admissible"] = v.admissible;
    j["case"] = to_string(v.adm_case);
    j["kind"] = to_string(v.kind);
    j["failed_conditions"] = v.failed_conditions;
    return j;
}

nlohmann::json to_json(const AdmissibleRow& row) {
    nlohmann::json j;
    j["params"] = to_json(row.params);
    j["case"] = to_string(row.verdict.adm_case);
    j["kind"] = to_string(row.verdict.kind);
    nlohmann::json magic = nlohmann::json::array();
    for (int m = row.m_min; m <= row.m_max; ++m) magic.push_back(m);
    j["magic"] = magic;
    if (!is_inf(row.params.k1)) {
        j["m_min"] = row.m_min;
        j["m_max"] = row.m_max;
    }
    return j;
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["kind"] = c.kind;
    j["vertices"] = c.vertices;
    j["labels"] = c.labels;
    j["detail"] = c.detail;
    return j;
}

nlohmann::json to_json(const TraceEntry& t) {
    nlohmann::json j;
    j["time"] = t.time;
    j["edge"] = {t.u, t.v};
    j["dist"] = t.dist;
    if (t.witness >= 0)
        j["witness"] = t.witness;
    else
        j["witness"] = nullptr;
    return j;
}

nlohmann::json to_json(const CompletionResult& r, bool include_trace) {
    nlohmann::json j;
    j["status"] = r.status == CompletionStatus::Success ? "SUCCESS" : "NO_COMPLETION";
    j["graph"] = to_json(r.graph);
    j["pode_dependent"] = r.pode_dependent;
    j["joined_components"] = r.joined_components;
    if (include_trace) {
        nlohmann::json trace = nlohmann::json::array();
        for (const TraceEntry& t : r.trace) trace.push_back(to_json(t));
        j["trace"] = trace;
    }
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    return j;
}

nlohmann::json to_json(const VerifyReport& rep) {
    nlohmann::json j;
    j["checked"] = rep.checked;
    nlohmann::json vios = nlohmann::json::array();
    for (const VerifyViolation& v : rep.violations)
        vios.push_back({{"instance", v.instance}, {"clause", v.clause}});
    j["violations"] = vios;
    j["skipped"] = rep.skipped;
    return j;
}

nlohmann::json to_json(const ObstacleCatalogue& cat) {
    nlohmann::json j;
    j["params"] = to_json(cat.params);
    j["bound_theoretical"] = cat.bound_theoretical;
    nlohmann::json cycles = nlohmann::json::object();
    for (const auto& [len, bucket] : cat.by_length) {
        nlohmann::json list = nlohmann::json::array();
        for (const std::vector<int>& cyc : bucket) {
            std::ostringstream os;
            for (size_t i = 0; i < cyc.size(); ++i) {
                if (i) os << ' ';
                os << cyc[i];
            }
            list.push_back(os.str());
        }
        cycles[std::to_string(len)] = list;
    }
    j["cycles"] = cycles;
    return j;
}

} // namespace mhg
