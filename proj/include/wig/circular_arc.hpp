#pragma once

#include <vector>

#include "wig/graph.hpp"
#include "wig/interval.hpp"

namespace wig {

// Closed arcs on a circle of integer circumference C. Arc (s, e) covers
// clockwise from s to e and wraps when e < s; s != e, so no arc is the full
// circle (an everything-adjacent vertex is an arc of length C-1).
struct ArcRep {
    struct Arc {
        std::int64_t s;
        std::int64_t e;
    };

    int n = 0;
    std::int64_t circumference = 1;
    std::vector<Arc> arcs;
};

void validate(const ArcRep& rep);

// Closed point sets share at least one position; case analysis on the wrap
// flags, endpoint touching counts.
bool arc_edge(const ArcRep& rep, Vertex i, Vertex j);

ExplicitGraph build_explicit(const ArcRep& rep);

// Interval family re-plotted on a circle with no wraps; intersections are
// preserved exactly (endpoints are spread so point intervals keep s != e).
ArcRep arc_from_interval(const IntervalRep& rep);

class ArcIndex {
public:
    explicit ArcIndex(const ArcRep& rep);

    // BFS by bidirectional span expansion. The reached union is one
    // contiguous arc; its clockwise and counterclockwise frontiers sweep
    // start- and end-sorted orders with monotone pointers. Once the union
    // covers the circle the remaining arcs all join the next layer.
    // Touches per run stay within 8n.
    DistanceRow sssp(Vertex s, WorkCounter* wc = nullptr) const;

    int n() const { return n_; }

private:
    int n_ = 0;
    std::int64_t circ_ = 1;
    std::vector<std::int64_t> s_;
    std::vector<std::int64_t> e_;
    std::vector<std::int64_t> len_; // clockwise extent: (e - s) mod C
    std::vector<int> by_start_;     // 0-based ids, s ascending
    std::vector<int> by_end_;       // 0-based ids, e ascending
    std::vector<std::int64_t> starts_sorted_;
    std::vector<std::int64_t> ends_sorted_;

    bool raw_edge(int i, int j) const;
};

DistanceRow circ_sssp(const ArcRep& rep, Vertex s, WorkCounter* wc = nullptr);

WienerValue circ_wiener(const ArcRep& rep, int threads = 1, WorkStats* stats = nullptr);

} // namespace wig
