#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wig/errors.hpp"

namespace wig {

// Vertices are 1..n in the public API.
using Vertex = int;
using Weight = std::int64_t;

// A distance entry is either a finite non-negative integer or unreachable.
// The marker is explicit (not a sentinel number) so overflow can never
// masquerade as reachability.
using Dist = std::optional<std::int64_t>;
inline constexpr std::nullopt_t kUnreachable = std::nullopt;

// Exact distances from one source. dist has one entry per vertex.
struct DistanceRow {
    Vertex source = 1;
    std::vector<Dist> dist;

    DistanceRow() = default;
    DistanceRow(Vertex s, int n) : source(s), dist(static_cast<std::size_t>(n)) {}

    int n() const { return static_cast<int>(dist.size()); }
    const Dist& at(Vertex v) const { return dist.at(static_cast<std::size_t>(v - 1)); }
    Dist& at(Vertex v) { return dist.at(static_cast<std::size_t>(v - 1)); }
};

// Undirected graph with positive integer edge weights, adjacency-list form.
// Unit weights when `weighted` is false.
struct ExplicitGraph {
    struct Edge {
        Vertex to;
        Weight weight;
    };

    int n = 0;
    bool weighted = false;
    std::vector<std::vector<Edge>> adj; // adj[v-1]

    ExplicitGraph() = default;
    explicit ExplicitGraph(int n_, bool weighted_ = false)
        : n(n_), weighted(weighted_), adj(static_cast<std::size_t>(n_)) {}

    const std::vector<Edge>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj[static_cast<std::size_t>(v - 1)];
    }

    bool has_edge(Vertex u, Vertex v) const;

    // Inserts u<->v once in each direction. Rejects self-loops, duplicates,
    // out-of-range ids and weights < 1 (or != 1 on an unweighted graph).
    void add_edge(Vertex u, Vertex v, Weight w = 1);

    // Same insertion without the duplicate scan; for bulk builders that
    // enumerate each unordered pair exactly once.
    void add_edge_unchecked(Vertex u, Vertex v, Weight w = 1);

    std::size_t edge_count() const;

    void check_vertex(Vertex v) const {
        if (v < 1 || v > n)
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n));
    }
};

// W(G) as an exact unsigned value; at least 63 usable bits.
struct WienerValue {
    std::uint64_t value = 0;

    friend bool operator==(const WienerValue&, const WienerValue&) = default;
};

// Deterministic instrumentation: vertex touch events and BFS layers.
// Counts only ever grow during a run.
struct WorkCounter {
    std::uint64_t vertex_visits = 0;
    std::uint64_t layer_count = 0;

    void touch(std::uint64_t k = 1) { vertex_visits += k; }
};

// Aggregate of per-source counters over a whole-graph run.
struct WorkStats {
    std::uint64_t total_visits = 0;
    std::uint64_t max_visits_per_source = 0;
    std::uint64_t max_layers = 0;
    std::uint64_t sources = 0;

    void absorb(const WorkCounter& wc) {
        total_visits += wc.vertex_visits;
        if (wc.vertex_visits > max_visits_per_source) max_visits_per_source = wc.vertex_visits;
        if (wc.layer_count > max_layers) max_layers = wc.layer_count;
        ++sources;
    }

    void merge(const WorkStats& other) {
        total_visits += other.total_visits;
        if (other.max_visits_per_source > max_visits_per_source)
            max_visits_per_source = other.max_visits_per_source;
        if (other.max_layers > max_layers) max_layers = other.max_layers;
        sources += other.sources;
    }
};

// Sums distances over ordered pairs with overflow checking; finish() halves
// the (always even) ordered sum into a WienerValue.
class WienerAccumulator {
public:
    // Adds every entry of the row. Throws DisconnectedGraphError on an
    // unreachable entry, OverflowError if the sum would wrap.
    void add_row(const DistanceRow& row);

    // Merges another accumulator's ordered sum (for parallel reduction).
    void add_ordered(std::uint64_t ordered);

    std::uint64_t ordered_sum() const { return ordered_sum_; }

    WienerValue finish() const;

private:
    std::uint64_t ordered_sum_ = 0;
};

// Adds with overflow detection; throws OverflowError on wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("distance sum overflows");
    return out;
}

} // namespace wig
