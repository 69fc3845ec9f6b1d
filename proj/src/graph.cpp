#include "wig/graph.hpp"

#include <algorithm>
#include <string>

namespace wig {

bool ExplicitGraph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adj[static_cast<std::size_t>(u - 1)];
    return std::any_of(row.begin(), row.end(), [v](const Edge& e) { return e.to == v; });
}

void ExplicitGraph::add_edge(Vertex u, Vertex v, Weight w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (w < 1) throw BadWeightError("edge weight must be >= 1, got " + std::to_string(w));
    if (!weighted && w != 1)
        throw BadWeightError("unweighted graph requires weight 1, got " + std::to_string(w));
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    add_edge_unchecked(u, v, w);
}

void ExplicitGraph::add_edge_unchecked(Vertex u, Vertex v, Weight w) {
    adj[static_cast<std::size_t>(u - 1)].push_back({v, w});
    adj[static_cast<std::size_t>(v - 1)].push_back({u, w});
}

std::size_t ExplicitGraph::edge_count() const {
    std::size_t directed = 0;
    for (const auto& row : adj) directed += row.size();
    return directed / 2;
}

void WienerAccumulator::add_row(const DistanceRow& row) {
    for (const Dist& d : row.dist) {
        if (!d) throw DisconnectedGraphError();
        std::uint64_t next;
        if (__builtin_add_overflow(ordered_sum_, static_cast<std::uint64_t>(*d), &next))
            throw OverflowError("Wiener accumulator overflows 64-bit ordered sum");
        ordered_sum_ = next;
    }
}

void WienerAccumulator::add_ordered(std::uint64_t ordered) {
    std::uint64_t next;
    if (__builtin_add_overflow(ordered_sum_, ordered, &next))
        throw OverflowError("Wiener accumulator overflows 64-bit ordered sum");
    ordered_sum_ = next;
}

WienerValue WienerAccumulator::finish() const {
    // The ordered sum over a symmetric distance matrix is even; a remainder
    // means the caller fed asymmetric rows.
    if (ordered_sum_ % 2 != 0)
        throw Error("ordered distance sum is odd: rows are not symmetric");
    return WienerValue{ordered_sum_ / 2};
}

} // namespace wig
