#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "wig/graph.hpp"
#include "wig/oracle.hpp"
#include "wig/rng.hpp"

namespace testutil {

inline wig::ExplicitGraph path_graph(int n) {
    wig::ExplicitGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline wig::ExplicitGraph cycle_graph(int n) {
    wig::ExplicitGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

inline wig::ExplicitGraph complete_graph(int n) {
    wig::ExplicitGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge_unchecked(u, v);
    return g;
}

// Connected G(n, p): a random spanning path plus coin-flip extras.
inline wig::ExplicitGraph random_connected_graph(int n, int percent, std::uint64_t seed) {
    wig::SplitMix64 rng(seed);
    wig::ExplicitGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (v == u + 1 || rng.below(100) < static_cast<std::uint64_t>(percent))
                g.add_edge_unchecked(u, v);
    return g;
}

inline std::vector<wig::DistanceRow> oracle_rows(const wig::ExplicitGraph& g) {
    std::vector<wig::DistanceRow> rows;
    rows.reserve(static_cast<std::size_t>(g.n));
    for (int s = 1; s <= g.n; ++s)
        rows.push_back(g.weighted ? wig::dijkstra_sssp(g, s) : wig::bfs_sssp(g, s));
    return rows;
}

inline std::string dist_str(const wig::Dist& d) {
    return d ? std::to_string(*d) : std::string("unreachable");
}

inline void check_row(const wig::DistanceRow& got, const wig::DistanceRow& want) {
    REQUIRE(got.source == want.source);
    REQUIRE(got.n() == want.n());
    for (int v = 1; v <= want.n(); ++v) {
        INFO("source ", want.source, ", vertex ", v, ": got ", dist_str(got.at(v)), ", want ",
             dist_str(want.at(v)));
        CHECK(got.at(v) == want.at(v));
    }
}

// Compact literal for expected rows; -1 encodes unreachable.
inline wig::DistanceRow row_of(wig::Vertex s, const std::vector<long long>& d) {
    wig::DistanceRow row(s, static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] >= 0) row.dist[i] = d[i];
    return row;
}

} // namespace testutil
