#pragma once

#include <vector>

#include "wig/graph.hpp"

namespace wig {

// Closed intervals on a line; vertex i+1 owns intervals[i]. Touching
// endpoints intersect. Duplicates are fine (twin vertices).
struct IntervalRep {
    struct Interval {
        std::int64_t l;
        std::int64_t r;
    };

    int n = 0;
    std::vector<Interval> intervals;
};

// Checks l <= r and the 63-bit endpoint range; throws std::invalid_argument.
void validate(const IntervalRep& rep);

bool interval_edge(const IntervalRep& rep, Vertex i, Vertex j);

// Pairwise predicate graph; the oracle substrate (O(n^2)).
ExplicitGraph build_explicit(const IntervalRep& rep);

// Index arrays sorted once and shared read-only by all per-source runs.
class IntervalIndex {
public:
    explicit IntervalIndex(const IntervalRep& rep);

    // BFS layers by span expansion: the union of intervals within distance k
    // is one contiguous segment, so the next layer is exactly the unreached
    // intervals meeting it. Two monotone pointer sweeps discover them; no
    // edge is ever materialized. Touches per run stay within 8n.
    DistanceRow sssp(Vertex s, WorkCounter* wc = nullptr) const;

    int n() const { return n_; }

private:
    int n_ = 0;
    std::vector<std::int64_t> l_;
    std::vector<std::int64_t> r_;
    std::vector<int> by_left_;  // 0-based ids, l ascending
    std::vector<int> by_right_; // 0-based ids, r descending
};

DistanceRow interval_sssp(const IntervalRep& rep, Vertex s, WorkCounter* wc = nullptr);

// One O(n log n) sort, then n O(n) runs.
WienerValue interval_wiener(const IntervalRep& rep, int threads = 1, WorkStats* stats = nullptr);

} // namespace wig
