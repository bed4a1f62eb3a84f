#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pursuit/game.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/strategies.hpp"
#include "pursuit/subdivided.hpp"
#include "support.hpp"

using namespace pursuit;
using namespace pursuit::testing;

TEST_CASE("retraction verification") {
    Graph c5 = gen_fixture("cycle:5");
    VertexMap identity{0, 1, 2, 3, 4};
    CHECK(is_retraction(c5, identity));

    VertexMap constant{2, 2, 2, 2, 2};
    CHECK(is_retraction(c5, constant));

    // the worked 5-cycle example: image is the edge {0,1}
    VertexMap onto_edge{0, 1, 1, 1, 0};
    CHECK(is_retraction(c5, onto_edge));

    // not idempotent
    VertexMap drift{1, 2, 3, 4, 0};
    CHECK_FALSE(is_retraction(c5, drift));

    // breaks an edge
    VertexMap tear{0, 1, 2, 0, 4};
    CHECK_FALSE(is_retraction(c5, tear));

    CHECK_THROWS_AS(is_retraction(c5, VertexMap{0, 1}), std::invalid_argument);
}

TEST_CASE("retraction search on the worked examples") {
    Graph c6 = gen_fixture("cycle:6");
    VertexSet whole(6);
    for (Vertex v = 0; v < 6; ++v) whole.insert(v);
    auto identity = find_retraction_onto(c6, whole);
    REQUIRE(identity.status == RetractSearchResult::Status::Found);
    for (Vertex v = 0; v < 6; ++v) CHECK((*identity.map)[v] == v);

    Graph c5 = gen_fixture("cycle:5");
    auto constant = find_retraction_onto(c5, VertexSet::of(5, {3}));
    REQUIRE(constant.status == RetractSearchResult::Status::Found);
    CHECK(is_retraction(c5, *constant.map));

    // even cycle onto one edge: fold the bipartition classes
    auto edge = find_retraction_onto(c6, VertexSet::of(6, {0, 1}));
    REQUIRE(edge.status == RetractSearchResult::Status::Found);
    CHECK(is_retraction(c6, *edge.map));

    // odd cycle onto a single edge also folds (edges may collapse)
    auto odd_edge = find_retraction_onto(c5, VertexSet::of(5, {0, 1}));
    CHECK(odd_edge.status == RetractSearchResult::Status::Found);

    // C_5 has no retraction onto an induced path of three vertices
    // (the two ends would need images at distance 2 in the image while the
    // outside arc has length 3) -- verify against brute force instead of
    // guessing: the oracle equivalence test below covers it.
    CHECK_THROWS_AS(find_retraction_onto(c6, VertexSet(6)), std::invalid_argument);
    CHECK_THROWS_AS(find_retraction_onto(c6, VertexSet::of(6, {0, 3})), std::invalid_argument);
}

TEST_CASE("retraction search equals the all-maps oracle on small graphs") {
    // every connected graph on <= 5 vertices, every connected induced image
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << edge_slots(n)); ++mask) {
            auto maybe = connected_graph_from_mask(n, mask);
            if (!maybe) continue;
            const Graph& g = *maybe;
            for (std::uint64_t h_mask = 1; h_mask < (1ULL << n); ++h_mask) {
                VertexSet h(n);
                for (int v = 0; v < n; ++v)
                    if (h_mask & (1ULL << v)) h.insert(v);
                auto [sub, mapping] = induced_subgraph(g, h);
                if (!sub.is_connected()) continue;
                auto fast = find_retraction_onto(g, h, 1'000'000);
                auto brute = brute_retraction_onto(g, h);
                REQUIRE(fast.status != RetractSearchResult::Status::Exceeded);
                CHECK((fast.status == RetractSearchResult::Status::Found) == brute.has_value());
                if (fast.map) {
                    CHECK(is_retraction(g, *fast.map));
                    for (Vertex v = 0; v < n; ++v)
                        if (h.contains(v)) CHECK((*fast.map)[v] == v);
                }
            }
        }
    }
}

TEST_CASE("verified retractions are nonexpansive") {
    for (const char* name : {"cycle:6", "petersen", "grid:3x3"}) {
        Graph g = gen_fixture(name);
        Rng rng = make_rng(5, "nonexpansive");
        int found = 0;
        for (int trial = 0; trial < 30 && found < 5; ++trial) {
            VertexSet h(g.vertex_count());
            Vertex seed_vertex = static_cast<Vertex>(uniform_below(rng, g.vertex_count()));
            h.insert(seed_vertex);
            for (Vertex w : g.neighbors(seed_vertex))
                if (uniform01(rng) < 0.6) h.insert(w);
            auto [sub, mapping] = induced_subgraph(g, h);
            if (!sub.is_connected()) continue;
            auto res = find_retraction_onto(g, h, 200'000);
            if (res.status != RetractSearchResult::Status::Found) continue;
            ++found;
            const VertexMap& f = *res.map;
            for (Vertex u = 0; u < g.vertex_count(); ++u) {
                auto du = g.distances_from(u);
                auto dfu = g.distances_from(f[u]);
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    CHECK(dfu[f[v]] <= du[v]);
            }
        }
        CHECK(found > 0);
    }
}

TEST_CASE("area defense shadows the robber and seals the image") {
    Graph c6 = gen_fixture("cycle:6");
    auto edge_fold = find_retraction_onto(c6, VertexSet::of(6, {0, 1}));
    REQUIRE(edge_fold.status == RetractSearchResult::Status::Found);
    const VertexMap f = *edge_fold.map;

    PlayOptions options;
    options.max_rounds = 60;
    options.rules.cops_place_after_robber = true;

    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        auto cop = area_defense_strategy(c6, f);
        auto robber = make_random_robber(seed);
        Transcript t = play(c6, *cop, 1, *robber, options);
        CHECK(t.outcome.kind != Outcome::Kind::IllegalMove);

        // whenever the robber stands inside the image on his own move, the
        // next cop half-move captures him
        Vertex robber_at = t.robber_placement;
        for (size_t i = 0; i < t.rounds.size(); ++i) {
            robber_at = t.rounds[i].robber;
            if (robber_at < 0) break;  // game ended on the cops' half-move
            if (f[robber_at] == robber_at) {
                // a cutoff on exactly this round truncates the capturing move
                if (static_cast<long long>(i) + 2 > options.max_rounds) break;
                bool caught_next =
                    t.outcome.kind == Outcome::Kind::Caught &&
                    t.outcome.round <= static_cast<int>(i) + 2;
                CHECK(caught_next);
                break;
            }
        }
    }

    // constant retraction: the cop camps on the vertex
    VertexMap constant(6, 2);
    auto cop = area_defense_strategy(c6, constant);
    auto robber = make_random_robber(9);
    Transcript t = play(c6, *cop, 1, *robber, options);
    CHECK(t.outcome.kind != Outcome::Kind::IllegalMove);

    CHECK_THROWS_AS(area_defense_strategy(c6, VertexMap{1, 2, 3, 4, 5, 0}),
                    std::invalid_argument);
}

TEST_CASE("reduce retract") {
    SubdividedHypercubeOptions opt;
    opt.force_label = EdgeLabel::Short;
    opt.force_extra = 0;
    auto sq = gen_subdivided_hypercube(2, 3, 12, 1, opt);
    const Graph& g = sq.graph;

    // whole graph reduces to itself
    VertexSet whole(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) whole.insert(v);
    CHECK(reduce_retract(sq, whole) == whole);

    // single cube vertex reduces to itself
    VertexSet corner(g.vertex_count());
    corner.insert(sq.cube_vertex_map[0]);
    CHECK(reduce_retract(sq, corner) == corner);

    // one full subdivision path (with endpoints) is already reduced
    VertexSet path_set(g.vertex_count());
    for (Vertex v : sq.path_map[0]) path_set.insert(v);
    CHECK(reduce_retract(sq, path_set) == path_set);

    // a partial path snaps back to the retained endpoint
    VertexSet partial(g.vertex_count());
    partial.insert(sq.path_map[0][0]);
    partial.insert(sq.path_map[0][1]);
    VertexSet snapped = reduce_retract(sq, partial);
    CHECK(snapped.size() == 1);
    CHECK(snapped.contains(sq.path_map[0][0]));

    CHECK_THROWS_AS(reduce_retract(sq, VertexSet(g.vertex_count())), std::invalid_argument);
}

TEST_CASE("union of quarters") {
    // empty set: vacuous
    CHECK(union_of_quarters_check(3, VertexSet(8)));
    // single vertex: every quarter has 2^(d-2) >= 2 members
    CHECK_FALSE(union_of_quarters_check(3, VertexSet::of(8, {5})));
    // the full cube
    VertexSet full(8);
    for (Vertex v = 0; v < 8; ++v) full.insert(v);
    CHECK(union_of_quarters_check(3, full));
    // a half-cube is a union of quarters
    VertexSet half(8);
    for (Vertex v = 0; v < 8; ++v)
        if (!(v & 1)) half.insert(v);
    CHECK(union_of_quarters_check(3, half));
    // quarters realize as codimension-2 subcubes
    VertexSet q = realize_quarters(3, {{0, 1, 1, 0}});
    CHECK(q.size() == 2);
    CHECK(union_of_quarters_check(3, q));

    CHECK_THROWS_AS(union_of_quarters_check(1, VertexSet(2)), std::invalid_argument);
}

TEST_CASE("union-of-quarters family size bound") {
    // count all subsets that pass the check; the 2^(2d^2-2d) bound from the
    // counting argument must hold (d <= 3 by direct enumeration)
    for (int d : {2, 3}) {
        const int n = 1 << d;
        std::uint64_t count = 0;
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1ULL << v)) s.insert(v);
            if (union_of_quarters_check(d, s)) ++count;
        }
        long double bound = std::pow(2.0L, 2 * d * d - 2 * d);
        CHECK(static_cast<long double>(count) <= bound);
        if (d == 2) CHECK(count == 16);  // quarters are singletons at d = 2
    }
}

TEST_CASE("configuration probabilities are exact") {
    Rational c1 = config1_probability();
    CHECK(c1.num == 11);
    CHECK(c1.den == 16);
    Rational c2 = config2_probability();
    CHECK(c2.num == 163);
    CHECK(c2.den == 256);
    CHECK(c1.num < c1.den);
    CHECK(c2.num < c2.den);
}

TEST_CASE("largest proper retract on forced fixtures") {
    // d=2, all short, s=3: single subdivided paths are retracts, and the
    // half-cycle fold is the largest candidate that verifies
    SubdividedHypercubeOptions opt;
    opt.force_label = EdgeLabel::Short;
    opt.force_extra = 0;
    auto sq = gen_subdivided_hypercube(2, 3, 12, 1, opt);
    auto scan = find_largest_proper_retract(sq);
    REQUIRE(scan.status == LargestRetractResult::Status::Found);
    CHECK(scan.size >= 3 + 2);
    CHECK(scan.size < sq.graph.vertex_count());
    REQUIRE(scan.map.has_value());
    CHECK(is_retraction(sq.graph, *scan.map));

    // d=3 all short: the scan still returns a verified retract
    auto sq3 = gen_subdivided_hypercube(3, 2, 11, 1, opt);
    auto scan3 = find_largest_proper_retract(sq3, 400'000);
    if (scan3.status == LargestRetractResult::Status::Found) {
        CHECK(is_retraction(sq3.graph, *scan3.map));
        CHECK(scan3.size < sq3.graph.vertex_count());
    } else {
        CHECK(scan3.status == LargestRetractResult::Status::Exceeded);
    }
}

TEST_CASE("harper boundary check") {
    // half-cube: boundary 2^(d-1) with |s| = 2^(d-1): passes
    for (int d : {3, 4, 5}) {
        VertexSet half(1 << d);
        for (int v = 0; v < (1 << d); ++v)
            if (!(v & 1)) half.insert(v);
        CHECK(harper_boundary_check(d, half));
        VertexSet single(1 << d);
        single.insert(0);
        CHECK(harper_boundary_check(d, single));
    }
    // exhaustive over Q_4
    for (std::uint64_t mask = 0; mask < (1ULL << 16); ++mask) {
        VertexSet s(16);
        for (int v = 0; v < 16; ++v)
            if (mask & (1ULL << v)) s.insert(v);
        if (!harper_boundary_check(4, s)) {
            CAPTURE(mask);
            CHECK(false);
            break;
        }
    }
}

TEST_CASE("vertex map file round trip") {
    VertexMap f{0, 1, 1, 1, 0};
    std::ostringstream os;
    write_vertex_map(os, f);
    std::istringstream is(os.str());
    CHECK(read_vertex_map(is, 5) == f);
    std::istringstream missing("0 0\n1 1\n");
    CHECK_THROWS_AS(read_vertex_map(missing, 3), std::invalid_argument);
}
