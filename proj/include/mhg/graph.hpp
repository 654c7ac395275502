#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mhg/params.hpp"

namespace mhg {

// Partial edge-labelled graph on vertices 0..n-1. Distance 0 marks an
// undefined pair; defined distances are positive. Labels are symmetric and
// the diagonal stays 0.
struct EdgeLabelledGraph {
    int n = 0;
    std::vector<int> dist;

    EdgeLabelledGraph() = default;
    explicit EdgeLabelledGraph(int vertices)
        : n(vertices), dist(static_cast<size_t>(vertices) * vertices, 0) {}

    int get(int u, int v) const {
        return dist[static_cast<size_t>(u) * n + v];
    }
    bool has_edge(int u, int v) const {
        return u != v && dist[static_cast<size_t>(u) * n + v] != 0;
    }
    void set_edge(int u, int v, int d) {
        dist[static_cast<size_t>(u) * n + v] = d;
        dist[static_cast<size_t>(v) * n + u] = d;
    }

    bool is_complete() const;
    int edge_count() const;
    // Undefined pairs (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> missing_pairs() const;

    bool operator==(const EdgeLabelledGraph&) const = default;
};

EdgeLabelledGraph induced_subgraph(const EdgeLabelledGraph& g, const std::vector<int>& vertices);

// Components of the defined-edge graph, each sorted ascending, ordered by
// smallest vertex.
std::vector<std::vector<int>> connected_components(const EdgeLabelledGraph& g);
bool is_connected(const EdgeLabelledGraph& g);

// Length of a shortest path through defined edges, or nullopt when v is
// unreachable from u.
std::optional<long long> path_distance(const EdgeLabelledGraph& g, int u, int v);

struct TriangleVerdict {
    bool allowed = true;
    TriangleReason reason = TriangleReason::None;
};

// Verdict for a single triangle. Throws Error(OutOfRange) unless all three
// distances lie in 1..delta.
TriangleVerdict triangle_verdict(int a, int b, int c, const ParameterSet& p);

struct Violation {
    enum class Type { Triangle, Henson };
    Type type = Type::Triangle;
    std::array<int, 3> vertices{};  // triangle case, i < j < k
    std::array<int, 3> labels{};    // d(i,j), d(i,k), d(j,k)
    TriangleReason reason = TriangleReason::None;
    HensonConstraint constraint;    // henson case
    std::vector<int> witness;       // embedding image, ascending
};

struct MembershipReport {
    bool pass = true;
    std::optional<Violation> violation;
};

// Scans every triangle in lexicographic (i, j, k) order, then the normalized
// henson constraints in family order, reporting the first violation found.
// Throws Error(IncompleteGraph) when a pair is undefined and
// Error(OutOfRange) when a distance exceeds delta.
MembershipReport membership_check(const EdgeLabelledGraph& g, const ParameterSet& p);

// True when the constraint embeds into g: a vertex subset inducing distances
// in {1, far} whose distance-1 classes have exactly the constraint's part
// sizes. far is delta, or delta-1 for companion constraints.
bool henson_embeds(const EdgeLabelledGraph& g, const HensonConstraint& h, int delta);

// Flips distances across a subset boundary: pairs with exactly one end in
// `flip` become delta - d. Requires a complete graph with distances below
// delta.
EdgeLabelledGraph antipodal_companion(const EdgeLabelledGraph& g, const std::vector<int>& flip,
                                      int delta);

// Doubles the graph: copy 0 keeps vertex ids, copy 1 is offset by n. The two
// copies of a vertex sit at distance delta and cross distances mirror to
// delta - d. Requires a complete graph with distances below delta.
EdgeLabelledGraph antipodal_extension(const EdgeLabelledGraph& g, int delta);

struct PodedGraph {
    EdgeLabelledGraph graph;
    std::vector<int> pode;  // ascending, one endpoint of every delta-pair
};

// Whether delta-edges form a perfect matching and every defined distance
// between distinct pairs closes to the full quadruple pattern.
bool is_antipodally_symmetric(const EdgeLabelledGraph& g, int delta);

// Pairs every unmatched vertex with a fresh partner at distance delta, then
// closes all quadruples: one known cross distance between two delta-pairs
// forces the other three. Idempotent. Throws Error(NoCompletion) when a
// vertex has two delta-neighbours or a forced distance conflicts with an
// existing edge.
EdgeLabelledGraph antipodal_symmetrize(const EdgeLabelledGraph& g, const ParameterSet& p);

namespace detail {

struct SymmetrizeOutcome {
    bool ok = false;
    EdgeLabelledGraph graph;
    int original_n = 0;
    std::vector<std::array<int, 3>> added;  // {u, v, dist} in fill order
    // set when !ok
    std::string fail_kind;                  // DELTA_FORK or QUADRUPLE_CONFLICT
    std::vector<int> fail_vertices;
    std::vector<int> fail_labels;
    std::string fail_detail;
};

SymmetrizeOutcome antipodal_symmetrize_detail(const EdgeLabelledGraph& g, int delta);

// Partner of each vertex under the delta-matching, or -1. Throws
// Error(NoCompletion) when some vertex has two delta-neighbours.
std::vector<int> delta_partners(const EdgeLabelledGraph& g, int delta);

} // namespace detail

} // namespace mhg
