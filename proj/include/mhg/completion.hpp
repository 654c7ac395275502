#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhg/graph.hpp"

namespace mhg {

// One edge added by a completion engine. Time 0 marks antipodal
// symmetrization, times 1..2*delta the fork schedule, 2*delta+1 the final
// fill or component join. witness -1 means no single vertex forced the value.
struct TraceEntry {
    int time = 0;
    int u = 0, v = 0;  // u < v
    int dist = 0;
    int witness = -1;

    bool operator==(const TraceEntry&) const = default;
};

enum class CompletionStatus { Success, NoCompletion };

struct Certificate {
    std::string kind;  // FORBIDDEN_TRIANGLE, HENSON, DELTA_FORK, QUADRUPLE_CONFLICT
    std::vector<int> vertices;
    std::vector<int> labels;
    std::string detail;
};

struct CompletionResult {
    CompletionStatus status = CompletionStatus::NoCompletion;
    EdgeLabelledGraph graph;
    std::vector<TraceEntry> trace;
    std::optional<Certificate> certificate;
    bool pode_dependent = false;
    bool joined_components = false;
};

// Value the fork (a, b) completes to under magic parameter M: the target of
// the earliest schedule step whose fork set contains (a, b), or M when none
// fires. Primitive classes only.
int fork_value(int a, int b, const ParameterSet& p, int M);

// Scheduled fork completion for primitive classes at magic parameter M.
CompletionResult magic_complete(const EdgeLabelledGraph& g, const ParameterSet& p, int M);

// Fork completion for bipartite classes: per-component schedule and parity
// fill, then a fold join across components.
CompletionResult bipartite_complete(const EdgeLabelledGraph& g, const ParameterSet& p, int M);

// Completion of an antipodally symmetric graph through the given pode. The
// pode half is completed at diameter delta-1 and the result is mirrored back.
CompletionResult antipodal_complete(const PodedGraph& pg, const ParameterSet& p);

// Same, choosing the canonical pode (lower-index endpoint of every
// delta-pair) and reporting whether the result can depend on that choice.
CompletionResult antipodal_complete_podefree(const EdgeLabelledGraph& g, const ParameterSet& p);

// Infinite-diameter completion: shortest-path distances through defined
// edges. Throws Error(Disconnected) when the graph has unreachable pairs.
CompletionResult shortest_path_complete(const EdgeLabelledGraph& g, const ParameterSet& p);

struct CompleteOptions {
    std::optional<std::vector<int>> pode;
    // Magic parameter for primitive and bipartite kinds; -1 selects the
    // canonical completion parameter, shifted when henson constraints demand
    // distance-1 and distance-delta neutrality.
    int magic = -1;
};

// Kind dispatch: symmetrizes antipodal inputs first, then runs the engine
// for the parameter set's kind.
CompletionResult dispatch_complete(const EdgeLabelledGraph& g, const ParameterSet& p,
                                   const CompleteOptions& opts = {});

// Smallest completion parameter whose schedule can neither create distance 1
// nor distance delta, required when henson constraints are present.
int henson_aware_parameter(const ParameterSet& p);

} // namespace mhg
