#include "mhg/completion.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>

namespace mhg {

namespace {

// Shared shape of the scheduled fork run. delta is the effective diameter of
// the run (one less than the class diameter for antipodal pode runs) and
// fc_base the constant of the third fork family: a pair (a, b) lies in the
// x-th set when fc_base - a - b = x. For bipartite runs the upper branch of
// the schedule starts above M+1 instead of M.
struct ForkPlan {
    int delta;
    int M;
    int fc_base;
    bool bipartite;
};

// Distance filled at step k of the schedule, or 0 when the step is idle.
// Odd steps 2x-1 handle targets x below M, even steps 2(delta-x) handle
// targets x above the fill band.
int step_target(const ForkPlan& fp, int k) {
    if (k % 2 == 1) {
        int x = (k + 1) / 2;
        return x < fp.M ? x : 0;
    }
    int x = fp.delta - k / 2;
    int band = fp.bipartite ? fp.M + 1 : fp.M;
    return x > band ? x : 0;
}

bool fork_fires(const ForkPlan& fp, int x, int a, int b) {
    if (x < fp.M) return a + b == x || fp.fc_base - a - b == x;
    return (a > b ? a - b : b - a) == x;
}

// One full schedule pass. Every step collects its additions against the
// state at the start of the step, then applies them together. The witness of
// an entry is the smallest common neighbour whose fork fired.
void run_schedule(EdgeLabelledGraph& g, const ForkPlan& fp, std::vector<TraceEntry>& trace) {
    struct Add {
        int u, v, w;
    };
    std::vector<Add> adds;
    for (int k = 1; k <= 2 * fp.delta; ++k) {
        int x = step_target(fp, k);
        if (x == 0) continue;
        adds.clear();
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                if (g.has_edge(u, v)) continue;
                for (int w = 0; w < g.n; ++w) {
                    if (w == u || w == v) continue;
                    int a = g.get(u, w), b = g.get(v, w);
                    if (a == 0 || b == 0) continue;
                    if (!fork_fires(fp, x, a, b)) continue;
                    adds.push_back({u, v, w});
                    break;
                }
            }
        for (const Add& ad : adds) {
            assert(!g.has_edge(ad.u, ad.v));
            g.set_edge(ad.u, ad.v, x);
            trace.push_back({k, ad.u, ad.v, x, ad.w});
        }
    }
}

void fill_remaining(EdgeLabelledGraph& g, int value, int time, std::vector<TraceEntry>& trace) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) {
                g.set_edge(u, v, value);
                trace.push_back({time, u, v, value, -1});
            }
}

Certificate certificate_from_violation(const Violation& vio) {
    Certificate c;
    if (vio.type == Violation::Type::Triangle) {
        c.kind = "FORBIDDEN_TRIANGLE";
        c.vertices.assign(vio.vertices.begin(), vio.vertices.end());
        c.labels.assign(vio.labels.begin(), vio.labels.end());
        c.detail = to_string(vio.reason);
    } else {
        c.kind = "HENSON";
        c.vertices = vio.witness;
        c.labels = vio.constraint.clique_sizes;
        c.detail = vio.constraint.companion ? "forbidden companion structure embeds"
                                            : "forbidden clique structure embeds";
    }
    return c;
}

void finish_with_membership(CompletionResult& r, const ParameterSet& p) {
    MembershipReport rep = membership_check(r.graph, p);
    if (rep.pass) {
        r.status = CompletionStatus::Success;
    } else {
        r.status = CompletionStatus::NoCompletion;
        r.certificate = certificate_from_violation(*rep.violation);
    }
}

void check_distances(const EdgeLabelledGraph& g, int delta) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int d = g.get(u, v);
            if (d < 0 || (!is_inf(delta) && d > delta))
                throw Error(ErrorCode::OutOfRange, "distance outside 1..delta");
        }
}

// Schedule pass, parity fill inside each component, then a fold join across
// components with cross distances M or M+1 by anchor parity.
void bipartite_core(EdgeLabelledGraph& g, const ForkPlan& fp, std::vector<TraceEntry>& trace,
                    bool& joined) {
    run_schedule(g, fp, trace);
    int fill_time = 2 * fp.delta + 1;
    std::vector<std::vector<int>> comps = connected_components(g);
    for (const std::vector<int>& comp : comps) {
        if (comp.size() < 2) continue;
        std::vector<int> colour(g.n, -1);
        std::vector<int> queue{comp[0]};
        colour[comp[0]] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v = 0; v < g.n; ++v)
                if (colour[v] < 0 && g.has_edge(u, v)) {
                    colour[v] = (colour[u] + g.get(u, v)) % 2;
                    queue.push_back(v);
                }
        }
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j) {
                int u = comp[i], v = comp[j];
                if (g.has_edge(u, v)) continue;
                int want = (colour[u] + colour[v]) % 2;
                int val = (want == fp.M % 2) ? fp.M : fp.M + 1;
                g.set_edge(u, v, val);
                trace.push_back({fill_time, u, v, val, -1});
            }
    }
    if (comps.size() <= 1) return;
    joined = true;
    std::vector<int> merged = comps[0];
    int anchor = merged[0];
    for (size_t ci = 1; ci < comps.size(); ++ci) {
        const std::vector<int>& comp = comps[ci];
        int comp_anchor = comp[0];
        for (int u : merged)
            for (int v : comp) {
                int pu = (u == anchor) ? 0 : g.get(anchor, u) % 2;
                int pv = (v == comp_anchor) ? 0 : g.get(comp_anchor, v) % 2;
                int val = ((pu + pv) % 2 == 0) ? fp.M : fp.M + 1;
                g.set_edge(u, v, val);
                trace.push_back({fill_time, std::min(u, v), std::max(u, v), val, -1});
            }
        merged.insert(merged.end(), comp.begin(), comp.end());
    }
}

} // namespace

int fork_value(int a, int b, const ParameterSet& p, int M) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible || v.kind != ClassKind::Primitive)
        throw Error(ErrorCode::NotAdmissible, "fork values need an admissible primitive class");
    std::vector<int> ms = magic_set(p);
    if (!std::binary_search(ms.begin(), ms.end(), M))
        throw Error(ErrorCode::OutOfRange, "M is not a magic parameter");
    if (a < 1 || a > p.delta || b < 1 || b > p.delta)
        throw Error(ErrorCode::OutOfRange, "fork distances outside 1..delta");
    ForkPlan fp{p.delta, M, p.c() - 1, false};
    for (int k = 1; k <= 2 * p.delta; ++k) {
        int x = step_target(fp, k);
        if (x != 0 && fork_fires(fp, x, a, b)) return x;
    }
    return M;
}

CompletionResult magic_complete(const EdgeLabelledGraph& g, const ParameterSet& p, int M) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible || v.kind != ClassKind::Primitive)
        throw Error(ErrorCode::NotAdmissible, "magic completion needs an admissible primitive class");
    if (!is_completion_parameter(p, M))
        throw Error(ErrorCode::OutOfRange, "M is not a completion parameter for this class");
    check_distances(g, p.delta);
    CompletionResult r;
    r.graph = g;
    ForkPlan fp{p.delta, M, p.c() - 1, false};
    run_schedule(r.graph, fp, r.trace);
    fill_remaining(r.graph, M, 2 * p.delta + 1, r.trace);
    finish_with_membership(r, p);
    return r;
}

CompletionResult bipartite_complete(const EdgeLabelledGraph& g, const ParameterSet& p, int M) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible || v.kind != ClassKind::Bipartite)
        throw Error(ErrorCode::NotAdmissible, "bipartite completion needs an admissible bipartite class");
    std::vector<int> ms = magic_set(p);
    if (!std::binary_search(ms.begin(), ms.end(), M))
        throw Error(ErrorCode::OutOfRange, "M is not a magic parameter for this class");
    check_distances(g, p.delta);
    CompletionResult r;
    r.graph = g;
    ForkPlan fp{p.delta, M, p.c0 - 2, true};
    bipartite_core(r.graph, fp, r.trace, r.joined_components);
    finish_with_membership(r, p);
    return r;
}

CompletionResult antipodal_complete(const PodedGraph& pg, const ParameterSet& p) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    bool antipodal = v.kind == ClassKind::AntipodalNonbipartite ||
                     v.kind == ClassKind::AntipodalBipartite;
    if (!v.admissible || !antipodal)
        throw Error(ErrorCode::NotAdmissible, "poded completion needs an admissible antipodal class");
    const EdgeLabelledGraph& g = pg.graph;
    check_distances(g, p.delta);
    if (!is_antipodally_symmetric(g, p.delta))
        throw Error(ErrorCode::NotSymmetric, "input must be antipodally symmetric");
    std::vector<int> partner = detail::delta_partners(g, p.delta);

    std::vector<bool> in_pode(g.n, false);
    for (size_t i = 0; i < pg.pode.size(); ++i) {
        int x = pg.pode[i];
        if (x < 0 || x >= g.n) throw Error(ErrorCode::OutOfRange, "pode vertex out of range");
        if (i > 0 && pg.pode[i - 1] >= x)
            throw Error(ErrorCode::Malformed, "pode must be strictly increasing");
        in_pode[x] = true;
    }
    for (int x = 0; x < g.n; ++x)
        if (in_pode[x] == in_pode[partner[x]])
            throw Error(ErrorCode::Malformed, "pode must take one endpoint of every delta-pair");

    int d = p.delta, M = d / 2;
    const std::vector<int>& P = pg.pode;
    std::vector<int> slot(g.n, -1);
    for (size_t i = 0; i < P.size(); ++i) slot[P[i]] = static_cast<int>(i);

    CompletionResult inner;
    inner.graph = induced_subgraph(g, P);
    bool joined = false;
    if (v.kind == ClassKind::AntipodalNonbipartite) {
        ForkPlan fp{d - 1, M, 2 * d, false};
        run_schedule(inner.graph, fp, inner.trace);
        fill_remaining(inner.graph, M, 2 * (d - 1) + 1, inner.trace);
    } else {
        ForkPlan fp{d - 1, M, 2 * d, true};
        bipartite_core(inner.graph, fp, inner.trace, joined);
    }

    CompletionResult r;
    r.graph = g;
    r.joined_components = joined;
    std::map<std::pair<int, int>, int> time_of;
    for (TraceEntry t : inner.trace) {
        t.u = P[t.u];
        t.v = P[t.v];
        if (t.witness >= 0) t.witness = P[t.witness];
        time_of[{t.u, t.v}] = t.time;
        r.trace.push_back(t);
    }
    // Mirror the completed pode back across the matching. Each added pode
    // edge determines the three cross slots of its quadruple.
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w) {
            if (r.graph.has_edge(u, w)) continue;
            int up = in_pode[u] ? u : partner[u];
            int wp = in_pode[w] ? w : partner[w];
            int base = inner.graph.get(slot[up], slot[wp]);
            int val = (in_pode[u] == in_pode[w]) ? base : d - base;
            r.graph.set_edge(u, w, val);
            if (u == std::min(up, wp) && w == std::max(up, wp)) continue;
            auto it = time_of.find({std::min(up, wp), std::max(up, wp)});
            assert(it != time_of.end());
            r.trace.push_back({it->second, u, w, val, -1});
        }
    std::stable_sort(r.trace.begin(), r.trace.end(),
                     [](const TraceEntry& a, const TraceEntry& b) { return a.time < b.time; });
    finish_with_membership(r, p);
    return r;
}

CompletionResult antipodal_complete_podefree(const EdgeLabelledGraph& g, const ParameterSet& p) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    bool antipodal = v.kind == ClassKind::AntipodalNonbipartite ||
                     v.kind == ClassKind::AntipodalBipartite;
    if (!v.admissible || !antipodal)
        throw Error(ErrorCode::NotAdmissible, "poded completion needs an admissible antipodal class");
    check_distances(g, p.delta);
    if (!is_antipodally_symmetric(g, p.delta))
        throw Error(ErrorCode::NotSymmetric, "input must be antipodally symmetric");
    std::vector<int> partner = detail::delta_partners(g, p.delta);
    std::vector<int> pode;
    for (int x = 0; x < g.n; ++x)
        if (partner[x] > x) pode.push_back(x);
    CompletionResult r = antipodal_complete({g, pode}, p);
    if (v.kind == ClassKind::AntipodalNonbipartite)
        r.pode_dependent = p.delta % 2 != 0;
    else
        r.pode_dependent = !(p.delta % 2 == 1 && is_connected(g));
    return r;
}

CompletionResult shortest_path_complete(const EdgeLabelledGraph& g, const ParameterSet& p) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible || !is_inf(p.delta))
        throw Error(ErrorCode::NotAdmissible,
                    "shortest-path completion needs an admissible infinite-diameter class");
    check_distances(g, p.delta);
    if (!is_connected(g))
        throw Error(ErrorCode::Disconnected, "shortest-path completion needs a connected graph");
    const long long wide = LLONG_MAX / 4;
    std::vector<long long> dist(static_cast<size_t>(g.n) * g.n, wide);
    for (int u = 0; u < g.n; ++u) {
        dist[static_cast<size_t>(u) * g.n + u] = 0;
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(u, w)) dist[static_cast<size_t>(u) * g.n + w] = g.get(u, w);
    }
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j) {
                long long via = dist[static_cast<size_t>(i) * g.n + k] +
                                dist[static_cast<size_t>(k) * g.n + j];
                if (via < dist[static_cast<size_t>(i) * g.n + j])
                    dist[static_cast<size_t>(i) * g.n + j] = via;
            }
    CompletionResult r;
    r.graph = g;
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w)
            if (!r.graph.has_edge(u, w)) {
                long long d = dist[static_cast<size_t>(u) * g.n + w];
                int val = d >= kInf ? kInf - 1 : static_cast<int>(d);
                r.graph.set_edge(u, w, val);
                r.trace.push_back({1, u, w, val, -1});
            }
    finish_with_membership(r, p);
    return r;
}

int henson_aware_parameter(const ParameterSet& p) {
    if (p.henson.empty()) return completion_parameter(p);
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible)
        throw Error(ErrorCode::NotAdmissible, "completion parameter requires admissible parameters");
    if (v.kind == ClassKind::Primitive) {
        for (int m : magic_set(p))
            if (is_completion_parameter(p, m) && m < p.delta) return m;
    } else if (v.kind == ClassKind::Bipartite) {
        for (int m : magic_set(p))
            if (m + 1 < p.delta) return m;
    } else {
        return p.delta / 2;
    }
    throw Error(ErrorCode::NotAdmissible, "no completion parameter avoids the henson distances");
}

CompletionResult dispatch_complete(const EdgeLabelledGraph& g, const ParameterSet& p,
                                   const CompleteOptions& opts) {
    AdmissibilityVerdict v = admissibility_verdict(p);
    if (!v.admissible) throw Error(ErrorCode::NotAdmissible, "parameters are not admissible");
    if (is_inf(p.delta)) return shortest_path_complete(g, p);
    switch (v.kind) {
    case ClassKind::Primitive: {
        int M = opts.magic >= 0 ? opts.magic : henson_aware_parameter(p);
        return magic_complete(g, p, M);
    }
    case ClassKind::Bipartite: {
        int M = opts.magic >= 0 ? opts.magic : henson_aware_parameter(p);
        return bipartite_complete(g, p, M);
    }
    default:
        break;
    }
    detail::SymmetrizeOutcome sym = detail::antipodal_symmetrize_detail(g, p.delta);
    if (!sym.ok) {
        CompletionResult r;
        r.status = CompletionStatus::NoCompletion;
        r.graph = g;
        r.certificate = Certificate{sym.fail_kind, sym.fail_vertices, sym.fail_labels,
                                    sym.fail_detail};
        return r;
    }
    CompletionResult r;
    if (opts.pode) {
        std::vector<int> pode = *opts.pode;
        for (int x : pode)
            if (x < 0 || x >= g.n)
                throw Error(ErrorCode::OutOfRange, "pode vertex out of range");
        std::vector<bool> inp(g.n, false);
        for (int x : pode) inp[x] = true;
        // partners created by symmetrization take the side opposite their mate
        for (const std::array<int, 3>& a : sym.added)
            if (a[2] == p.delta && a[0] < sym.original_n && a[1] >= sym.original_n && !inp[a[0]])
                pode.push_back(a[1]);
        std::sort(pode.begin(), pode.end());
        r = antipodal_complete({sym.graph, pode}, p);
    } else {
        r = antipodal_complete_podefree(sym.graph, p);
    }
    if (!sym.added.empty()) {
        std::vector<TraceEntry> full;
        full.reserve(sym.added.size() + r.trace.size());
        for (const std::array<int, 3>& a : sym.added) full.push_back({0, a[0], a[1], a[2], -1});
        full.insert(full.end(), r.trace.begin(), r.trace.end());
        r.trace = std::move(full);
    }
    return r;
}

} // namespace mhg
