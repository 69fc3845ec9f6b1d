#pragma once

#include <vector>

#include "wig/graph.hpp"
#include "wig/interval.hpp"
#include "wig/permutation.hpp"

namespace wig {

// Trapezoid between two horizontal lines: corners [a, b] on the top line and
// [c, d] on the bottom line. Two trapezoids are adjacent when they overlap,
// i.e. neither lies entirely to the left of the other.
struct TrapezoidRep {
    struct Trap {
        std::int64_t a;
        std::int64_t b;
        std::int64_t c;
        std::int64_t d;
    };

    int n = 0;
    std::vector<Trap> traps;
};

void validate(const TrapezoidRep& rep);

bool trap_edge(const TrapezoidRep& rep, Vertex i, Vertex j);

ExplicitGraph build_explicit(const TrapezoidRep& rep);

// Degenerate embeddings: an interval is a rectangle, a permutation segment a
// zero-width trapezoid. Both preserve adjacency exactly.
TrapezoidRep trap_from_interval(const IntervalRep& rep);
TrapezoidRep trap_from_permutation(const PermutationRep& rep);

class TrapezoidIndex {
public:
    explicit TrapezoidIndex(const TrapezoidRep& rep);

    // BFS whose layer test splits "some frontier trapezoid overlaps j" into
    // four one-sided dominance conditions; each is answered by a prefix
    // maximum over a precomputed sorted order, so a layer costs two sweeps
    // plus one pass over the open candidates — well under 8n touches.
    DistanceRow sssp(Vertex s, WorkCounter* wc = nullptr) const;

    bool edge(Vertex i, Vertex j) const;

    int n() const { return n_; }

private:
    int n_ = 0;
    std::vector<std::int64_t> a_, b_, c_, d_;
    std::vector<int> by_a_;        // ids, a ascending
    std::vector<int> by_c_;        // ids, c ascending
    std::vector<int> rk_b_a_;      // #{i : a_i <= b_j}, bucketed once
    std::vector<int> rk_d_c_;      // #{i : c_i <= d_j}
};

DistanceRow trap_sssp(const TrapezoidRep& rep, Vertex s, WorkCounter* wc = nullptr);

WienerValue trap_wiener(const TrapezoidRep& rep, int threads = 1, WorkStats* stats = nullptr);

} // namespace wig
