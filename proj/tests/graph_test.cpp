#include <doctest.h>

#include <vector>

#include "mhg/graph.hpp"

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

EdgeLabelledGraph triangle(int a, int b, int c) {
    EdgeLabelledGraph g(3);
    g.set_edge(0, 1, a);
    g.set_edge(0, 2, b);
    g.set_edge(1, 2, c);
    return g;
}

} // namespace

TEST_CASE("edge storage and missing pairs") {
    EdgeLabelledGraph g(4);
    CHECK(g.edge_count() == 0);
    CHECK_FALSE(g.is_complete());
    g.set_edge(1, 3, 2);
    CHECK(g.has_edge(3, 1));
    CHECK(g.get(3, 1) == 2);
    CHECK_FALSE(g.has_edge(0, 0));
    CHECK(g.edge_count() == 1);

    std::vector<std::pair<int, int>> missing = g.missing_pairs();
    REQUIRE(missing.size() == 5);
    CHECK(missing.front() == std::pair<int, int>{0, 1});
    CHECK(missing.back() == std::pair<int, int>{2, 3});

    g.set_edge(0, 1, 1);
    g.set_edge(0, 2, 1);
    g.set_edge(0, 3, 1);
    g.set_edge(1, 2, 1);
    g.set_edge(2, 3, 1);
    CHECK(g.is_complete());
    CHECK(g.missing_pairs().empty());
}

TEST_CASE("induced subgraphs keep the selected order") {
    EdgeLabelledGraph g(4);
    g.set_edge(0, 2, 3);
    g.set_edge(2, 3, 1);
    EdgeLabelledGraph h = induced_subgraph(g, {3, 2, 0});
    REQUIRE(h.n == 3);
    CHECK(h.get(0, 1) == 1);  // old (3, 2)
    CHECK(h.get(1, 2) == 3);  // old (2, 0)
    CHECK_FALSE(h.has_edge(0, 2));
}

TEST_CASE("components and path distances") {
    EdgeLabelledGraph g(6);
    g.set_edge(0, 4, 2);
    g.set_edge(4, 2, 3);
    g.set_edge(1, 5, 7);
    std::vector<std::vector<int>> comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 2, 4});
    CHECK(comps[1] == std::vector<int>{1, 5});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK_FALSE(is_connected(g));

    CHECK(path_distance(g, 0, 2) == 5);
    CHECK(path_distance(g, 1, 5) == 7);
    CHECK(path_distance(g, 0, 0) == 0);
    CHECK_FALSE(path_distance(g, 0, 3).has_value());
}

TEST_CASE("triangle verdicts validate their inputs") {
    ParameterSet p = make(5, 3, 3, 16, 13);
    CHECK(triangle_verdict(1, 3, 3, p).allowed);
    TriangleVerdict v = triangle_verdict(5, 5, 5, p);
    CHECK_FALSE(v.allowed);
    CHECK(v.reason == TriangleReason::C1Bound);
    CHECK_THROWS_AS(triangle_verdict(0, 1, 1, p), Error);
    CHECK_THROWS_AS(triangle_verdict(1, 1, 6, p), Error);
}

TEST_CASE("membership scans triangles in lexicographic order") {
    ParameterSet p = make(3, 1, 3, 10, 11);

    EdgeLabelledGraph good(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) good.set_edge(u, v, 2);
    CHECK(membership_check(good, p).pass);

    // two forbidden triangles; the report must name the lexicographically
    // first one, (0, 1, 2)
    EdgeLabelledGraph bad(4);
    bad.set_edge(0, 1, 1);
    bad.set_edge(0, 2, 1);
    bad.set_edge(1, 2, 3);
    bad.set_edge(0, 3, 1);
    bad.set_edge(1, 3, 3);
    bad.set_edge(2, 3, 2);
    MembershipReport rep = membership_check(bad, p);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.violation->type == Violation::Type::Triangle);
    CHECK(rep.violation->vertices == std::array<int, 3>{0, 1, 2});
    CHECK(rep.violation->labels == std::array<int, 3>{1, 1, 3});
    CHECK(rep.violation->reason == TriangleReason::NonMetric);

    EdgeLabelledGraph partial(3);
    partial.set_edge(0, 1, 1);
    CHECK_THROWS_AS(membership_check(partial, p), Error);

    EdgeLabelledGraph wide = triangle(1, 4, 4);
    CHECK_THROWS_AS(membership_check(wide, p), Error);
}

TEST_CASE("membership reports henson witnesses") {
    ParameterSet p = make(3, 1, 3, 10, 11);
    p.henson = {HensonConstraint{{4}, false}};

    EdgeLabelledGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.set_edge(u, v, 1);
    MembershipReport rep = membership_check(k4, p);
    REQUIRE_FALSE(rep.pass);
    CHECK(rep.violation->type == Violation::Type::Henson);
    CHECK(rep.violation->constraint == p.henson.front());
    CHECK(rep.violation->witness == std::vector<int>{0, 1, 2, 3});

    // a near-clique with one stretched edge no longer embeds K4
    k4.set_edge(2, 3, 2);
    CHECK(membership_check(k4, p).pass);
}

TEST_CASE("henson embedding is a subset search") {
    HensonConstraint k3{{3}, false};
    HensonConstraint i3{{1, 1, 1}, false};
    HensonConstraint pair21{{2, 1}, false};
    HensonConstraint comp21{{2, 1}, true};

    EdgeLabelledGraph g(4);
    g.set_edge(0, 1, 1);
    g.set_edge(0, 2, 1);
    g.set_edge(1, 2, 1);
    g.set_edge(0, 3, 3);
    g.set_edge(1, 3, 3);
    g.set_edge(2, 3, 3);
    CHECK(henson_embeds(g, k3, 3));
    CHECK(henson_embeds(g, pair21, 3));  // subset {0, 1, 3}
    CHECK_FALSE(henson_embeds(g, i3, 3));
    CHECK_FALSE(henson_embeds(g, comp21, 3));  // needs distance 2 across

    EdgeLabelledGraph far(3);
    far.set_edge(0, 1, 3);
    far.set_edge(0, 2, 3);
    far.set_edge(1, 2, 3);
    CHECK(henson_embeds(far, i3, 3));

    // companion parts sit at distance delta-1
    EdgeLabelledGraph c(3);
    c.set_edge(0, 1, 1);
    c.set_edge(0, 2, 3);
    c.set_edge(1, 2, 3);
    CHECK(henson_embeds(c, comp21, 4));
    CHECK_FALSE(henson_embeds(c, comp21, 3));
}

TEST_CASE("antipodal companion flips across the boundary") {
    EdgeLabelledGraph g = triangle(1, 2, 2);
    EdgeLabelledGraph h = antipodal_companion(g, {2}, 3);
    CHECK(h.get(0, 1) == 1);
    CHECK(h.get(0, 2) == 1);
    CHECK(h.get(1, 2) == 1);

    // flipping everything is the identity
    CHECK(antipodal_companion(g, {0, 1, 2}, 3) == g);

    CHECK_THROWS_AS(antipodal_companion(triangle(1, 2, 3), {0}, 3), Error);
    EdgeLabelledGraph partial(3);
    partial.set_edge(0, 1, 1);
    CHECK_THROWS_AS(antipodal_companion(partial, {0}, 3), Error);
    CHECK_THROWS_AS(antipodal_companion(g, {7}, 3), Error);
}

TEST_CASE("antipodal extension doubles and mirrors") {
    EdgeLabelledGraph g = triangle(1, 2, 2);
    int delta = 4;
    EdgeLabelledGraph ext = antipodal_extension(g, delta);
    REQUIRE(ext.n == 6);
    CHECK(ext.get(0, 3) == 4);
    CHECK(ext.get(1, 4) == 4);
    CHECK(ext.get(3, 4) == 1);   // copies keep internal distances
    CHECK(ext.get(0, 4) == 3);   // cross pairs mirror to delta - d
    CHECK(ext.get(2, 3) == 2);
    CHECK(ext.is_complete());
    CHECK(is_antipodally_symmetric(ext, delta));

    CHECK(membership_check(ext, make(4, 1, 3, 10, 9)).pass);
}

TEST_CASE("antipodal symmetry recognizer") {
    int delta = 4;
    EdgeLabelledGraph two_pairs(4);
    two_pairs.set_edge(0, 1, 4);
    two_pairs.set_edge(2, 3, 4);
    CHECK(is_antipodally_symmetric(two_pairs, delta));

    // an unmatched vertex breaks the matching
    EdgeLabelledGraph odd(3);
    odd.set_edge(0, 1, 4);
    CHECK_FALSE(is_antipodally_symmetric(odd, delta));

    // a half-closed quadruple: cross distance present in one slot only
    EdgeLabelledGraph half(4);
    half.set_edge(0, 1, 4);
    half.set_edge(2, 3, 4);
    half.set_edge(0, 2, 1);
    CHECK_FALSE(is_antipodally_symmetric(half, delta));
    half.set_edge(1, 3, 1);
    half.set_edge(0, 3, 3);
    half.set_edge(1, 2, 3);
    CHECK(is_antipodally_symmetric(half, delta));
}

TEST_CASE("symmetrization pairs vertices and closes quadruples") {
    ParameterSet p = make(4, 1, 3, 10, 9);

    EdgeLabelledGraph g(3);
    g.set_edge(0, 1, 4);
    g.set_edge(0, 2, 1);
    EdgeLabelledGraph s = antipodal_symmetrize(g, p);
    REQUIRE(s.n == 4);  // vertex 2 gains a partner
    CHECK(s.get(2, 3) == 4);
    CHECK(s.get(1, 3) == 1);  // forced by the (0, 2) edge
    CHECK(s.get(0, 3) == 3);
    CHECK(s.get(1, 2) == 3);
    CHECK(is_antipodally_symmetric(s, 4));

    // idempotent on already-symmetric graphs
    CHECK(antipodal_symmetrize(s, p) == s);

    detail::SymmetrizeOutcome out = detail::antipodal_symmetrize_detail(g, 4);
    REQUIRE(out.ok);
    CHECK(out.original_n == 3);
    REQUIRE_FALSE(out.added.empty());
    CHECK(out.added.front() == std::array<int, 3>{2, 3, 4});
}

TEST_CASE("symmetrization failures carry certificates") {
    // two delta-neighbours of vertex 0
    EdgeLabelledGraph fork(3);
    fork.set_edge(0, 1, 4);
    fork.set_edge(0, 2, 4);
    detail::SymmetrizeOutcome out = detail::antipodal_symmetrize_detail(fork, 4);
    REQUIRE_FALSE(out.ok);
    CHECK(out.fail_kind == "DELTA_FORK");
    CHECK(out.fail_vertices == std::vector<int>{0, 1, 2});

    // quadruple closure contradicts an existing edge
    EdgeLabelledGraph clash(4);
    clash.set_edge(0, 1, 4);
    clash.set_edge(2, 3, 4);
    clash.set_edge(0, 2, 1);
    clash.set_edge(1, 2, 2);  // forced value is 3
    out = detail::antipodal_symmetrize_detail(clash, 4);
    REQUIRE_FALSE(out.ok);
    CHECK(out.fail_kind == "QUADRUPLE_CONFLICT");

    ParameterSet p = make(4, 1, 3, 10, 9);
    CHECK_THROWS_AS(antipodal_symmetrize(fork, p), Error);
}

TEST_CASE("delta partner extraction") {
    EdgeLabelledGraph g(4);
    g.set_edge(0, 2, 4);
    std::vector<int> partner = detail::delta_partners(g, 4);
    CHECK(partner == std::vector<int>{2, -1, 0, -1});

    g.set_edge(0, 3, 4);
    CHECK_THROWS_AS(detail::delta_partners(g, 4), Error);
}
