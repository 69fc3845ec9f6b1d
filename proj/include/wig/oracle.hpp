#pragma once

#include <functional>
#include <span>

#include "wig/graph.hpp"

namespace wig {

// Hop-count distances on an unweighted graph. Oracle for all unweighted
// classes; plain queue BFS over the explicit adjacency.
DistanceRow bfs_sssp(const ExplicitGraph& g, Vertex s);

// Exact weighted distances, binary-heap Dijkstra. Oracle for weighted cactus.
DistanceRow dijkstra_sssp(const ExplicitGraph& g, Vertex s);

// Half the ordered-pair distance sum. rows must cover sources 1..n exactly.
// Throws DisconnectedGraphError on any unreachable entry, OverflowError if
// the 63-bit result would wrap.
WienerValue wiener_from_rows(std::span<const DistanceRow> rows);

// Per-source oracle SSSP composed with wiener_from_rows.
WienerValue oracle_wiener(const ExplicitGraph& g);

// Runs row_fn for every source 1..n (on `threads` threads when > 1) and
// reduces rows into a Wiener value without keeping them. Order-independent:
// integer sums and counter maxima only.
WienerValue wiener_over_sources(int n,
                                const std::function<DistanceRow(Vertex, WorkCounter&)>& row_fn,
                                int threads = 1, WorkStats* stats = nullptr);

} // namespace wig
