#include <doctest.h>

#include <cstdint>
#include <variant>
#include <vector>

#include "helpers.hpp"
#include "wig/circular_arc.hpp"
#include "wig/document.hpp"
#include "wig/generate.hpp"
#include "wig/oracle.hpp"

using namespace wig;
using namespace testutil;

namespace {

ArcRep arcs_of(std::int64_t circumference, std::vector<ArcRep::Arc> arcs) {
    ArcRep rep;
    rep.n = static_cast<int>(arcs.size());
    rep.circumference = circumference;
    rep.arcs = std::move(arcs);
    return rep;
}

// Four arcs around a circle of 8, touching endpoints: the cycle C4.
const ArcRep kRing4 = arcs_of(8, {{0, 2}, {2, 4}, {4, 6}, {6, 0}});

ArcRep generated_arcs(int n, std::uint64_t seed) {
    GenSpec spec;
    spec.cls = GraphClass::CircularArc;
    spec.n = n;
    spec.seed = seed;
    return std::get<ArcRep>(generate(spec).doc.rep);
}

IntervalRep generated_intervals(int n, std::uint64_t seed) {
    GenSpec spec;
    spec.cls = GraphClass::Interval;
    spec.n = n;
    spec.seed = seed;
    return std::get<IntervalRep>(generate(spec).doc.rep);
}

} // namespace

TEST_SUITE_BEGIN("circular-arc");

TEST_CASE("validation rejects bad circles, positions and full arcs") {
    CHECK_NOTHROW(validate(kRing4));
    CHECK_NOTHROW(validate(arcs_of(1, {})));
    CHECK_THROWS_AS(validate(arcs_of(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(validate(arcs_of(8, {{3, 3}})), std::invalid_argument); // s == e
    CHECK_THROWS_AS(validate(arcs_of(8, {{0, 8}})), std::invalid_argument); // e out of range
    CHECK_THROWS_AS(validate(arcs_of(8, {{-1, 2}})), std::invalid_argument);
    ArcRep bad = kRing4;
    bad.n = 3;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("the predicate handles wraps and endpoint touching") {
    auto rep = arcs_of(8, {{0, 2}, {2, 4}, {4, 6}, {6, 1}, {7, 3}, {5, 1}});
    CHECK(arc_edge(rep, 1, 2));       // touch at position 2
    CHECK_FALSE(arc_edge(rep, 1, 3)); // {0..2} vs {4..6}
    CHECK(arc_edge(rep, 4, 1));       // wrap {6,7,0,1} meets {0,1,2}
    CHECK(arc_edge(rep, 5, 6));       // two wrapping arcs always share position 0
    CHECK(arc_edge(rep, 6, 5));
    CHECK_THROWS_AS(arc_edge(rep, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(arc_edge(rep, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(arc_edge(rep, 1, 7), std::out_of_range);
}

TEST_CASE("explicit build matches the predicate pairwise") {
    auto rep = generated_arcs(24, 5);
    auto g = build_explicit(rep);
    for (Vertex i = 1; i <= rep.n; ++i)
        for (Vertex j = i + 1; j <= rep.n; ++j)
            CHECK(g.has_edge(i, j) == arc_edge(rep, i, j));
}

TEST_CASE("distances on frozen instances") {
    check_row(circ_sssp(kRing4, 1), row_of(1, {0, 1, 2, 1}));
    check_row(circ_sssp(kRing4, 3), row_of(3, {2, 1, 0, 1}));

    // Every arc covers position 5: a clique.
    auto clique = arcs_of(10, {{4, 6}, {3, 5}, {2, 7}, {4, 5}, {5, 9}});
    check_row(circ_sssp(clique, 2), row_of(2, {1, 0, 1, 1, 1}));

    // An arc of length C-1 sees everything; the satellites are two apart.
    auto star = arcs_of(8, {{0, 7}, {1, 2}, {4, 5}});
    check_row(circ_sssp(star, 1), row_of(1, {0, 1, 1}));
    check_row(circ_sssp(star, 2), row_of(2, {1, 0, 2}));

    auto split = arcs_of(10, {{0, 2}, {5, 7}});
    check_row(circ_sssp(split, 1), row_of(1, {0, -1}));

    CHECK_THROWS_AS(circ_sssp(kRing4, 0), std::out_of_range);
    CHECK_THROWS_AS(circ_sssp(kRing4, 5), std::out_of_range);
}

TEST_CASE("wiener values on frozen instances") {
    CHECK(circ_wiener(kRing4) == WienerValue{8});
    // Six arcs of two steps each around a circle of 12: the cycle C6.
    CHECK(circ_wiener(arcs_of(12, {{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {10, 0}})) ==
          WienerValue{27});
    CHECK(circ_wiener(arcs_of(10, {{4, 6}, {3, 5}, {2, 7}, {4, 5}, {5, 9}})) == WienerValue{10});
    CHECK(circ_wiener(arcs_of(8, {{0, 7}, {1, 2}, {4, 5}})) == WienerValue{4});
    CHECK(circ_wiener(arcs_of(6, {{2, 4}})) == WienerValue{0});
    CHECK_THROWS_AS(circ_wiener(arcs_of(10, {{0, 2}, {5, 7}})), DisconnectedGraphError);
}

TEST_CASE("random families match the hop-count oracle row for row") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        int n = 1 + static_cast<int>(seed % 48);
        auto rep = generated_arcs(n, seed);
        auto g = build_explicit(rep);
        ArcIndex idx(rep);
        for (Vertex s = 1; s <= rep.n; ++s) check_row(idx.sssp(s), bfs_sssp(g, s));
        CHECK(circ_wiener(rep) == oracle_wiener(g));
    }
}

TEST_CASE("rotating every arc around the circle changes nothing") {
    auto rep = generated_arcs(36, 616);
    for (std::int64_t delta : {std::int64_t{1}, std::int64_t{7}, rep.circumference - 1}) {
        auto turned = rep;
        for (auto& a : turned.arcs) {
            a.s = (a.s + delta) % rep.circumference;
            a.e = (a.e + delta) % rep.circumference;
        }
        for (Vertex s = 1; s <= rep.n; ++s) check_row(circ_sssp(turned, s), circ_sssp(rep, s));
        CHECK(circ_wiener(turned) == circ_wiener(rep));
    }
}

TEST_CASE("interval families embed with intersections preserved") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        auto ivs = generated_intervals(1 + static_cast<int>(seed % 40), seed);
        auto arcs = arc_from_interval(ivs);
        REQUIRE(arcs.n == ivs.n);
        CHECK_NOTHROW(validate(arcs));
        for (const auto& a : arcs.arcs) CHECK(a.s < a.e); // embedding never wraps
        for (Vertex i = 1; i <= ivs.n; ++i) {
            for (Vertex j = i + 1; j <= ivs.n; ++j)
                CHECK(arc_edge(arcs, i, j) == interval_edge(ivs, i, j));
            check_row(circ_sssp(arcs, i), interval_sssp(ivs, i));
        }
        CHECK(circ_wiener(arcs) == interval_wiener(ivs));
    }
}

TEST_CASE("point intervals survive the embedding") {
    auto ivs = IntervalRep{5, {{5, 5}, {5, 5}, {5, 9}, {2, 5}, {6, 7}}};
    auto arcs = arc_from_interval(ivs);
    CHECK_NOTHROW(validate(arcs));
    for (Vertex i = 1; i <= ivs.n; ++i)
        for (Vertex j = i + 1; j <= ivs.n; ++j)
            CHECK(arc_edge(arcs, i, j) == interval_edge(ivs, i, j));
    CHECK(circ_wiener(arcs) == interval_wiener(ivs));

    auto empty = arc_from_interval(IntervalRep{0, {}});
    CHECK(empty.n == 0);
    CHECK_NOTHROW(validate(empty));
}

TEST_CASE("a covering union saturates into one final flush") {
    // Narrow arcs creep around the ring; wide ones cover the circle after a
    // layer or two, so the stragglers all land together.
    for (std::int64_t len : {std::int64_t{3}, std::int64_t{9}, std::int64_t{31}}) {
        ArcRep rep;
        rep.n = 40;
        rep.circumference = 80;
        for (int i = 0; i < 40; ++i) rep.arcs.push_back({2 * i, (2 * i + len) % 80});
        auto g = build_explicit(rep);
        ArcIndex idx(rep);
        for (Vertex s = 1; s <= rep.n; ++s) check_row(idx.sssp(s), bfs_sssp(g, s));
    }
}

TEST_CASE("per-source touches stay within the 8n budget") {
    const int n = 1024;
    auto rep = generated_arcs(n, 271828);
    WorkStats stats;
    circ_wiener(rep, 1, &stats);
    CHECK(stats.sources == static_cast<std::uint64_t>(n));
    CHECK(stats.max_visits_per_source <= 8ull * n);
}

TEST_SUITE_END();
