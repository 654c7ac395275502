#include <doctest.h>

#include <vector>

#include "mhg/obstacles.hpp"

namespace {

using namespace mhg;

ParameterSet make(int delta, int k1, int k2, int c0, int c1) {
    ParameterSet p;
    p.delta = delta;
    p.k1 = k1;
    p.k2 = k2;
    p.c0 = c0;
    p.c1 = c1;
    return p;
}

using Cycles = std::vector<std::vector<int>>;

} // namespace

TEST_CASE("canonical cycle form") {
    CHECK(canonical_cycle({1, 5, 5, 5}) == std::vector<int>{1, 5, 5, 5});
    CHECK(canonical_cycle({5, 5, 1, 5}) == std::vector<int>{1, 5, 5, 5});
    CHECK(canonical_cycle({1, 1, 1, 4}) == std::vector<int>{1, 1, 1, 4});

    // rotations and the reflection collapse to one representative
    CHECK(canonical_cycle({5, 1, 4, 5}) == std::vector<int>{1, 4, 5, 5});
    CHECK(canonical_cycle({4, 1, 5, 5}) == std::vector<int>{1, 4, 5, 5});
    CHECK(canonical_cycle({3, 2, 1}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_cycle({2, 1, 5, 1}) == std::vector<int>{1, 2, 1, 5});
}

TEST_CASE("cycle graphs leave chords open") {
    EdgeLabelledGraph g = cycle_graph({1, 5, 5, 5});
    REQUIRE(g.n == 4);
    CHECK(g.get(0, 1) == 1);
    CHECK(g.get(3, 0) == 5);
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.edge_count() == 4);
}

TEST_CASE("obstacle catalogue of the doubled-gap class") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    ObstacleCatalogue cat = enumerate_obstacles(p, 5, ObstacleDecider::Engine);
    CHECK(cat.bound_theoretical == 96);
    REQUIRE(cat.by_length.size() == 3);

    // length 3: exactly the forbidden triangles
    Cycles want3 = {{1, 1, 1}, {1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {1, 2, 2},
                    {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {1, 4, 4}, {1, 5, 5},
                    {2, 2, 5}, {2, 4, 5}, {3, 5, 5}, {4, 4, 5}, {5, 5, 5}};
    CHECK(cat.by_length.at(3) == want3);

    // length 4: cycles where some chord has no legal value against both forks
    Cycles want4 = {{1, 1, 1, 2}, {1, 1, 1, 4}, {1, 1, 1, 5}, {1, 1, 2, 5},
                    {1, 1, 4, 5}, {1, 2, 1, 5}, {1, 2, 5, 5}, {1, 4, 1, 5},
                    {1, 4, 5, 5}, {1, 5, 2, 5}, {1, 5, 4, 5}, {2, 5, 5, 5},
                    {4, 5, 5, 5}};
    CHECK(cat.by_length.at(4) == want4);

    Cycles want5 = {{1, 1, 1, 1, 1}, {1, 1, 1, 1, 5}, {1, 1, 1, 5, 5},
                    {1, 1, 5, 1, 5}, {1, 1, 5, 5, 5}, {1, 5, 1, 5, 5},
                    {1, 5, 5, 5, 5}, {5, 5, 5, 5, 5}};
    CHECK(cat.by_length.at(5) == want5);

    // the completable reference cycle stays out
    for (const std::vector<int>& c : cat.by_length.at(4))
        CHECK(c != std::vector<int>{1, 5, 5, 5});
}

TEST_CASE("engine and oracle deciders agree on short cycles") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    ObstacleCatalogue engine = enumerate_obstacles(p, 5, ObstacleDecider::Engine);
    ObstacleCatalogue oracle = enumerate_obstacles(p, 5, ObstacleDecider::Oracle);
    CHECK(engine.by_length == oracle.by_length);
}

TEST_CASE("the catalogue runs dry at length six") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    ObstacleCatalogue cat = enumerate_obstacles(p, 6, ObstacleDecider::Engine);
    CHECK(cat.by_length.at(6).empty());
}

TEST_CASE("obstacle enumeration guards") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    CHECK_THROWS_AS(enumerate_obstacles(p, 9, ObstacleDecider::Engine), Error);
    CHECK_THROWS_AS(enumerate_obstacles(p, 2, ObstacleDecider::Engine), Error);
    CHECK_THROWS_AS(enumerate_obstacles(make(3, 1, 2, 8, 7), 5, ObstacleDecider::Engine), Error);
    CHECK_THROWS_AS(enumerate_obstacles(make(4, kInf, 0, 12, 9), 5, ObstacleDecider::Engine),
                    Error);
}

TEST_CASE("backward expansion splices fork preimages") {
    ParameterSet p = make(5, 3, 3, 16, 13);

    CHECK(backward_expand({4, 4, 5}, p, 3) == Cycles{{1, 5, 4, 5}, {1, 4, 5, 5}});
    CHECK(backward_expand({1, 2, 2}, p, 3) == Cycles{{1, 1, 1, 2}, {1, 2, 5, 5}});
    CHECK(backward_expand({1, 2, 4}, p, 3) ==
          Cycles{{1, 1, 1, 4}, {1, 4, 5, 5}, {1, 2, 1, 5}, {1, 1, 2, 5}});
    CHECK(backward_expand({2, 4, 5}, p, 3) ==
          Cycles{{1, 1, 4, 5}, {4, 5, 5, 5}, {1, 2, 5, 5}, {1, 5, 2, 5}});

    // labels at the fill value have no fork preimage and are skipped
    CHECK(backward_expand({3, 5, 5}, p, 3).empty());
}

TEST_CASE("cycle images are closed walks") {
    EdgeLabelledGraph tri(3);
    tri.set_edge(0, 1, 1);
    tri.set_edge(0, 2, 1);
    tri.set_edge(1, 2, 2);
    CHECK(cycle_maps_into({1, 1, 2}, tri));
    CHECK(cycle_maps_into({1, 2, 1}, tri));
    CHECK_FALSE(cycle_maps_into({1, 1, 1}, tri));
    CHECK_FALSE(cycle_maps_into({1, 1, 2}, EdgeLabelledGraph(0)));

    EdgeLabelledGraph lone(2);
    lone.set_edge(0, 1, 1);
    CHECK_FALSE(cycle_maps_into({1, 1, 2}, lone));

    // images may revisit vertices: a walk out and back spells 1, 1 twice
    CHECK(cycle_maps_into({1, 1, 1, 1}, lone));
}

TEST_CASE("samples without an obstacle image always complete") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    ObstacleCatalogue cat = enumerate_obstacles(p, 5, ObstacleDecider::Engine);
    VerifyReport r = verify_obstacle_closure(p, cat, 60, 7);
    CHECK(r.pass());
    CHECK(r.checked >= 1);
    CHECK(r.checked <= 60);
}
