#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhg/completion.hpp"

namespace mhg {

struct OracleOptions {
    int max_unknown = 12;
    int max_vertices = 9;
};

// Every class member extending g, in lexicographic order of the assigned
// distance vector (missing pairs in (u, v) order, values ascending). Throws
// Error(TooLarge) when the search would exceed the configured bounds.
std::vector<EdgeLabelledGraph> enumerate_completions(const EdgeLabelledGraph& g,
                                                     const ParameterSet& p,
                                                     const OracleOptions& opts = {});

// Whether at least one completion exists. Unbounded in the number of unknown
// pairs; stops at the first witness.
bool has_completion(const EdgeLabelledGraph& g, const ParameterSet& p);

// All label-preserving vertex permutations, each as an image vector, in
// lexicographic order. Throws Error(TooLarge) above max_vertices.
std::vector<std::vector<int>> automorphisms(const EdgeLabelledGraph& g, int max_vertices = 9);

struct VerifyViolation {
    std::string instance;
    std::string clause;
};

struct VerifyReport {
    long long checked = 0;
    std::vector<VerifyViolation> violations;
    std::vector<std::string> skipped;

    bool pass() const { return violations.empty(); }
};

// Compares the engine completion of g against every oracle completion,
// pairwise, under the kind's optimality clauses. The engine must succeed on
// g; otherwise the instance is recorded as skipped.
VerifyReport verify_optimality(const EdgeLabelledGraph& g, const ParameterSet& p, int M);

// Parity agreement between engine and oracle completions on the pairs the
// kind makes claims about.
VerifyReport verify_parity(const EdgeLabelledGraph& g, const ParameterSet& p, int M);

// Every automorphism of g must preserve the engine completion. Inputs whose
// kind makes no such claim are recorded as skipped.
VerifyReport verify_automorphism_preservation(const EdgeLabelledGraph& g, const ParameterSet& p);

// Amalgamation instance: a and b overlap in the first c.n vertices, which
// carry identical distances in both.
struct AmalgamTriple {
    EdgeLabelledGraph c;
    EdgeLabelledGraph a;
    EdgeLabelledGraph b;
};

// Canonical amalgam: lay out the free amalgam over the shared base, complete
// it with the kind's engine at magic parameter M, and return the completed
// graph on vertices [base | a-extras | b-extras]. Kinds without a local
// amalgamation procedure are rejected.
EdgeLabelledGraph canonical_amalgam(const AmalgamTriple& t, const ParameterSet& p, int M);

// Exercises the canonical amalgamation operator on every class member up to
// size_bound vertices: symmetry in the two factors, monotonicity under
// shrinking one factor, stationarity under relabelling, and associativity of
// nested amalgams.
VerifyReport sir_property_suite(const ParameterSet& p, int M, int size_bound);

// Compact one-line rendering of a graph for report instances.
std::string format_graph(const EdgeLabelledGraph& g);

// All complete graphs on n vertices whose triangles and henson constraints
// pass membership, in lexicographic label order.
std::vector<EdgeLabelledGraph> class_members(const ParameterSet& p, int n);

} // namespace mhg
