#pragma once

#include <cstdint>
#include <map>

#include "mhg/oracle.hpp"

namespace mhg {

// Lexicographically least rotation or reflection of the label sequence.
std::vector<int> canonical_cycle(const std::vector<int>& labels);

// Cycle on labels.size() vertices with edge i -- i+1 (mod n) labelled
// labels[i]; chords stay undefined.
EdgeLabelledGraph cycle_graph(const std::vector<int>& labels);

enum class ObstacleDecider { Engine, Oracle };

struct ObstacleCatalogue {
    ParameterSet params;
    long long bound_theoretical = 0;  // 3 * 2^delta
    std::map<int, std::vector<std::vector<int>>> by_length;
};

// Canonical non-completable cycles of every length 3..max_len. The ENGINE
// decider runs the scheduled completion at the class's completion parameter,
// the ORACLE decider searches exhaustively.
ObstacleCatalogue enumerate_obstacles(const ParameterSet& p, int max_len, ObstacleDecider decider);

// Length-(k+1) candidates obtained by replacing one edge of the cycle with a
// fork the schedule maps to that label, canonically deduplicated in
// first-encounter order. Candidates still need a completability re-check.
std::vector<std::vector<int>> backward_expand(const std::vector<int>& cycle,
                                              const ParameterSet& p, int M);

// Whether the labelled cycle admits a homomorphic image in g: a closed walk
// whose consecutive distances spell the labels.
bool cycle_maps_into(const std::vector<int>& labels, const EdgeLabelledGraph& g);

// Seeded sampling check of obstacle-set completeness: random partial graphs
// with no catalogue image must complete. Samples that contain an image are
// counted and skipped.
VerifyReport verify_obstacle_closure(const ParameterSet& p, const ObstacleCatalogue& catalogue,
                                     int samples, uint32_t seed);

} // namespace mhg
