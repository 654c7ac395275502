#include "mhg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

namespace mhg {

bool EdgeLabelledGraph::is_complete() const {
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has_edge(u, v)) return false;
    return true;
}

int EdgeLabelledGraph::edge_count() const {
    int c = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) ++c;
    return c;
}

std::vector<std::pair<int, int>> EdgeLabelledGraph::missing_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

EdgeLabelledGraph induced_subgraph(const EdgeLabelledGraph& g, const std::vector<int>& vertices) {
    EdgeLabelledGraph out(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            int d = g.get(vertices[i], vertices[j]);
            if (d != 0) out.set_edge(static_cast<int>(i), static_cast<int>(j), d);
        }
    return out;
}

std::vector<std::vector<int>> connected_components(const EdgeLabelledGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (int v = 0; v < g.n; ++v)
                if (!seen[v] && g.has_edge(u, v)) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const EdgeLabelledGraph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

std::optional<long long> path_distance(const EdgeLabelledGraph& g, int u, int v) {
    if (u == v) return 0LL;
    std::vector<long long> best(g.n, -1);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    best[u] = 0;
    heap.emplace(0, u);
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d != best[x]) continue;
        if (x == v) return d;
        for (int y = 0; y < g.n; ++y) {
            if (!g.has_edge(x, y)) continue;
            long long nd = d + g.get(x, y);
            if (best[y] < 0 || nd < best[y]) {
                best[y] = nd;
                heap.emplace(nd, y);
            }
        }
    }
    return std::nullopt;
}

TriangleVerdict triangle_verdict(int a, int b, int c, const ParameterSet& p) {
    for (int d : {a, b, c})
        if (d < 1 || (!is_inf(p.delta) && d > p.delta))
            throw Error(ErrorCode::OutOfRange, "triangle distance outside 1..delta");
    TriangleReason r = forbidden_reason(a, b, c, p);
    return {r == TriangleReason::None, r};
}

namespace {

// Classes of the distance-1 relation on the chosen set must be cliques with
// the prescribed part sizes, all cross distances equal to far.
bool signature_matches(const EdgeLabelledGraph& g, const std::vector<int>& chosen, int far,
                       const std::vector<int>& sizes) {
    int m = static_cast<int>(chosen.size());
    std::vector<int> cls(m, -1);
    int classes = 0;
    for (int i = 0; i < m; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = classes;
        for (int j = i + 1; j < m; ++j)
            if (g.get(chosen[i], chosen[j]) == 1) {
                if (cls[j] >= 0) return false;
                cls[j] = classes;
            }
        ++classes;
    }
    std::vector<int> counts(classes, 0);
    for (int i = 0; i < m; ++i) ++counts[cls[i]];
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int want = cls[i] == cls[j] ? 1 : far;
            if (g.get(chosen[i], chosen[j]) != want) return false;
        }
    std::sort(counts.begin(), counts.end(), std::greater<int>());
    return counts == sizes;
}

// Lexicographically first embedding image, or empty when none exists.
std::vector<int> henson_witness(const EdgeLabelledGraph& g, const HensonConstraint& h, int delta) {
    int far = h.companion ? delta - 1 : delta;
    int target = h.order();
    if (target > g.n) return {};
    std::vector<int> chosen;
    std::function<bool(int)> extend = [&](int next) -> bool {
        if (static_cast<int>(chosen.size()) == target)
            return signature_matches(g, chosen, far, h.clique_sizes);
        if (g.n - next < target - static_cast<int>(chosen.size())) return false;
        for (int v = next; v < g.n; ++v) {
            bool fits = true;
            for (int u : chosen) {
                int d = g.get(u, v);
                if (d != 1 && d != far) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            chosen.push_back(v);
            if (extend(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (extend(0)) return chosen;
    return {};
}

} // namespace

bool henson_embeds(const EdgeLabelledGraph& g, const HensonConstraint& h, int delta) {
    return !henson_witness(g, h, delta).empty();
}

MembershipReport membership_check(const EdgeLabelledGraph& g, const ParameterSet& p) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int d = g.get(u, v);
            if (d == 0) throw Error(ErrorCode::IncompleteGraph, "membership needs a complete graph");
            if (d < 0 || (!is_inf(p.delta) && d > p.delta))
                throw Error(ErrorCode::OutOfRange, "distance outside 1..delta");
        }
    MembershipReport rep;
    for (int i = 0; i < g.n && rep.pass; ++i)
        for (int j = i + 1; j < g.n && rep.pass; ++j)
            for (int k = j + 1; k < g.n && rep.pass; ++k) {
                int a = g.get(i, j), b = g.get(i, k), c = g.get(j, k);
                TriangleReason r = forbidden_reason(a, b, c, p);
                if (r != TriangleReason::None) {
                    Violation vio;
                    vio.type = Violation::Type::Triangle;
                    vio.vertices = {i, j, k};
                    vio.labels = {a, b, c};
                    vio.reason = r;
                    rep.pass = false;
                    rep.violation = std::move(vio);
                }
            }
    if (!rep.pass || is_inf(p.delta)) return rep;
    for (const HensonConstraint& h : normalized_henson(p)) {
        std::vector<int> image = henson_witness(g, h, p.delta);
        if (!image.empty()) {
            Violation vio;
            vio.type = Violation::Type::Henson;
            vio.constraint = h;
            vio.witness = std::move(image);
            rep.pass = false;
            rep.violation = std::move(vio);
            break;
        }
    }
    return rep;
}

namespace {

void require_complete_below_delta(const EdgeLabelledGraph& g, int delta) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int d = g.get(u, v);
            if (d == 0) throw Error(ErrorCode::IncompleteGraph, "operation needs a complete graph");
            if (d >= delta) throw Error(ErrorCode::OutOfRange, "distance must stay below delta");
        }
}

} // namespace

EdgeLabelledGraph antipodal_companion(const EdgeLabelledGraph& g, const std::vector<int>& flip,
                                      int delta) {
    require_complete_below_delta(g, delta);
    std::vector<bool> in_flip(g.n, false);
    for (int v : flip) {
        if (v < 0 || v >= g.n) throw Error(ErrorCode::OutOfRange, "flip vertex out of range");
        in_flip[v] = true;
    }
    EdgeLabelledGraph out = g;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (in_flip[u] != in_flip[v]) out.set_edge(u, v, delta - g.get(u, v));
    return out;
}

EdgeLabelledGraph antipodal_extension(const EdgeLabelledGraph& g, int delta) {
    require_complete_below_delta(g, delta);
    EdgeLabelledGraph out(2 * g.n);
    for (int u = 0; u < g.n; ++u) {
        out.set_edge(u, g.n + u, delta);
        for (int v = u + 1; v < g.n; ++v) {
            int d = g.get(u, v);
            out.set_edge(u, v, d);
            out.set_edge(g.n + u, g.n + v, d);
            out.set_edge(u, g.n + v, delta - d);
            out.set_edge(g.n + u, v, delta - d);
        }
    }
    return out;
}

namespace detail {

std::vector<int> delta_partners(const EdgeLabelledGraph& g, int delta) {
    std::vector<int> partner(g.n, -1);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.get(u, v) != delta) continue;
            if (partner[u] >= 0 || partner[v] >= 0)
                throw Error(ErrorCode::NoCompletion, "vertex with two delta-neighbours");
            partner[u] = v;
            partner[v] = u;
        }
    return partner;
}

SymmetrizeOutcome antipodal_symmetrize_detail(const EdgeLabelledGraph& g, int delta) {
    SymmetrizeOutcome out;
    out.original_n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.get(u, v) > delta)
                throw Error(ErrorCode::OutOfRange, "distance exceeds delta");

    // Delta-edges must form a partial matching before anything is added.
    std::vector<int> partner(g.n, -1);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (g.get(u, v) != delta) continue;
            if (partner[u] >= 0 || partner[v] >= 0) {
                int w = partner[u] >= 0 ? u : v;
                int other = partner[w];
                int third = (w == u) ? v : u;
                out.fail_kind = "DELTA_FORK";
                out.fail_vertices = {w, std::min(other, third), std::max(other, third)};
                out.fail_labels = {delta, delta};
                out.fail_detail = "vertex has two distinct delta-neighbours";
                return out;
            }
            partner[u] = v;
            partner[v] = u;
        }

    int unmatched = 0;
    for (int u = 0; u < g.n; ++u)
        if (partner[u] < 0) ++unmatched;

    EdgeLabelledGraph h(g.n + unmatched);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.set_edge(u, v, g.get(u, v));
    partner.resize(h.n, -1);
    int next = g.n;
    for (int u = 0; u < g.n; ++u) {
        if (partner[u] >= 0) continue;
        partner[u] = next;
        partner[next] = u;
        h.set_edge(u, next, delta);
        out.added.push_back({u, next, delta});
        ++next;
    }

    // Quadruple closure. Each unordered pair of delta-pairs is independent:
    // one known cross distance fixes the other three slots.
    for (int x = 0; x < h.n; ++x) {
        int xs = partner[x];
        if (xs < x) continue;
        for (int y = x + 1; y < h.n; ++y) {
            int ys = partner[y];
            if (ys < y || y == xs) continue;
            int c = 0;
            if (h.has_edge(x, y)) c = h.get(x, y);
            else if (h.has_edge(xs, ys)) c = h.get(xs, ys);
            else if (h.has_edge(x, ys)) c = delta - h.get(x, ys);
            else if (h.has_edge(xs, y)) c = delta - h.get(xs, y);
            if (c == 0) continue;
            struct Slot { int u, v, want; };
            Slot slots[4] = {{x, y, c}, {xs, ys, c}, {x, ys, delta - c}, {xs, y, delta - c}};
            for (const Slot& s : slots) {
                if (h.has_edge(s.u, s.v)) {
                    if (h.get(s.u, s.v) != s.want) {
                        out.fail_kind = "QUADRUPLE_CONFLICT";
                        out.fail_vertices = {x, xs, y, ys};
                        out.fail_labels = {h.get(s.u, s.v), s.want};
                        out.fail_detail = "cross distances of two delta-pairs disagree";
                        return out;
                    }
                } else {
                    h.set_edge(s.u, s.v, s.want);
                    int a = std::min(s.u, s.v), b = std::max(s.u, s.v);
                    out.added.push_back({a, b, s.want});
                }
            }
        }
    }
    out.ok = true;
    out.graph = std::move(h);
    return out;
}

} // namespace detail

bool is_antipodally_symmetric(const EdgeLabelledGraph& g, int delta) {
    std::vector<int> partner;
    try {
        partner = detail::delta_partners(g, delta);
    } catch (const Error&) {
        return false;
    }
    for (int u = 0; u < g.n; ++u)
        if (partner[u] < 0) return false;
    for (int x = 0; x < g.n; ++x) {
        int xs = partner[x];
        if (xs < x) continue;
        for (int y = x + 1; y < g.n; ++y) {
            int ys = partner[y];
            if (ys < y || y == xs) continue;
            int defined = g.has_edge(x, y) + g.has_edge(x, ys) + g.has_edge(xs, y) +
                          g.has_edge(xs, ys);
            if (defined == 0) continue;
            if (defined < 4) return false;
            int c = g.get(x, y);
            if (g.get(xs, ys) != c || g.get(x, ys) != delta - c || g.get(xs, y) != delta - c)
                return false;
        }
    }
    return true;
}

EdgeLabelledGraph antipodal_symmetrize(const EdgeLabelledGraph& g, const ParameterSet& p) {
    if (is_inf(p.delta)) throw Error(ErrorCode::OutOfRange, "symmetrization needs finite delta");
    detail::SymmetrizeOutcome out = detail::antipodal_symmetrize_detail(g, p.delta);
    if (!out.ok) throw Error(ErrorCode::NoCompletion, out.fail_detail);
    return std::move(out.graph);
}

} // namespace mhg
