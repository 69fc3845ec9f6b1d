#include "wig/circular_arc.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wig/oracle.hpp"

namespace wig {
namespace {

// Positions stay below 2^61 so unrolled coordinates (within 3C of zero)
// never overflow.
constexpr std::int64_t kPositionLimit = std::int64_t{1} << 61;

std::int64_t mod_c(std::int64_t x, std::int64_t c) {
    const std::int64_t r = x % c;
    return r < 0 ? r + c : r;
}

bool edge_raw(std::int64_t s1, std::int64_t e1, std::int64_t s2, std::int64_t e2) {
    const bool w1 = e1 < s1;
    const bool w2 = e2 < s2;
    if (w1 && w2) return true; // both cover the top of the circle
    if (w1) return e2 >= s1 || s2 <= e1;
    if (w2) return e1 >= s2 || s1 <= e2;
    return s2 <= e1 && s1 <= e2;
}

// Walks one sorted id array circularly, yielding each id once by unrolled
// coordinate: ascending through (anchor, anchor+C] for the clockwise side,
// descending through [anchor-C, anchor-1] for the counterclockwise side.
struct Cursor {
    const std::vector<int>* order = nullptr;
    const std::vector<std::int64_t>* pos = nullptr;
    std::int64_t circ = 1;
    std::int64_t anchor = 0;
    std::int64_t anchor_m = 0;
    int dir = 1;
    std::int64_t at = 0;
    std::size_t taken = 0;

    bool exhausted() const { return taken == order->size(); }

    int peek() const {
        const auto n = static_cast<std::int64_t>(order->size());
        return (*order)[static_cast<std::size_t>(mod_c(at, n))];
    }

    std::int64_t coord(int id) const {
        const std::int64_t p = (*pos)[id];
        if (dir > 0) return anchor + 1 + mod_c(p - anchor_m - 1, circ);
        return anchor - 1 - mod_c(anchor_m - 1 - p, circ);
    }

    void advance() {
        at += dir;
        ++taken;
    }
};

Cursor make_cursor(const std::vector<int>& order, const std::vector<std::int64_t>& pos,
                   const std::vector<std::int64_t>& sorted_vals, int dir, std::int64_t anchor,
                   std::int64_t circ) {
    Cursor c;
    c.order = &order;
    c.pos = &pos;
    c.circ = circ;
    c.anchor = anchor;
    c.anchor_m = mod_c(anchor, circ);
    c.dir = dir;
    if (dir > 0) {
        c.at = std::lower_bound(sorted_vals.begin(), sorted_vals.end(), c.anchor_m + 1) -
               sorted_vals.begin();
    } else {
        c.at = (std::upper_bound(sorted_vals.begin(), sorted_vals.end(), c.anchor_m - 1) -
                sorted_vals.begin()) -
               1;
    }
    return c;
}

} // namespace

void validate(const ArcRep& rep) {
    if (rep.n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (rep.arcs.size() != static_cast<std::size_t>(rep.n))
        throw std::invalid_argument("arc count does not match n");
    if (rep.circumference < 1) throw std::invalid_argument("circumference must be positive");
    if (rep.circumference > kPositionLimit)
        throw std::invalid_argument("circumference too large");
    for (int i = 0; i < rep.n; ++i) {
        const auto& a = rep.arcs[static_cast<std::size_t>(i)];
        if (a.s < 0 || a.s >= rep.circumference || a.e < 0 || a.e >= rep.circumference)
            throw std::invalid_argument("arc " + std::to_string(i + 1) +
                                        " has endpoints outside the circle");
        if (a.s == a.e)
            throw std::invalid_argument("arc " + std::to_string(i + 1) +
                                        " degenerates to a full circle (s == e)");
    }
}

bool arc_edge(const ArcRep& rep, Vertex i, Vertex j) {
    if (i < 1 || i > rep.n || j < 1 || j > rep.n) throw std::out_of_range("vertex out of range");
    if (i == j) throw std::invalid_argument("adjacency is only defined for distinct vertices");
    const auto& a = rep.arcs[static_cast<std::size_t>(i - 1)];
    const auto& b = rep.arcs[static_cast<std::size_t>(j - 1)];
    return edge_raw(a.s, a.e, b.s, b.e);
}

ExplicitGraph build_explicit(const ArcRep& rep) {
    validate(rep);
    ExplicitGraph g(rep.n, false);
    for (Vertex i = 1; i <= rep.n; ++i)
        for (Vertex j = i + 1; j <= rep.n; ++j)
            if (arc_edge(rep, i, j)) g.add_edge_unchecked(i, j, 1);
    return g;
}

ArcRep arc_from_interval(const IntervalRep& rep) {
    validate(rep);
    ArcRep out;
    out.n = rep.n;
    if (rep.n == 0) {
        out.circumference = 3;
        return out;
    }
    std::int64_t lo = rep.intervals.front().l;
    std::int64_t hi = rep.intervals.front().r;
    for (const auto& iv : rep.intervals) {
        lo = std::min(lo, iv.l);
        hi = std::max(hi, iv.r);
    }
    const std::int64_t span = hi - lo;
    if (span > (std::int64_t{1} << 59))
        throw std::invalid_argument("interval span too wide to plot on a circle");
    // Doubling the coordinates keeps point intervals as proper arcs (s < e)
    // and preserves the intersection predicate: l2 <= r1 iff 2*l2 <= 2*r1+1.
    out.circumference = 2 * span + 3;
    out.arcs.reserve(static_cast<std::size_t>(rep.n));
    for (const auto& iv : rep.intervals)
        out.arcs.push_back({2 * (iv.l - lo), 2 * (iv.r - lo) + 1});
    return out;
}

ArcIndex::ArcIndex(const ArcRep& rep) {
    validate(rep);
    n_ = rep.n;
    circ_ = rep.circumference;
    s_.resize(static_cast<std::size_t>(n_));
    e_.resize(static_cast<std::size_t>(n_));
    len_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        const auto& a = rep.arcs[static_cast<std::size_t>(i)];
        s_[static_cast<std::size_t>(i)] = a.s;
        e_[static_cast<std::size_t>(i)] = a.e;
        len_[static_cast<std::size_t>(i)] = mod_c(a.e - a.s, circ_);
    }
    by_start_.resize(static_cast<std::size_t>(n_));
    std::iota(by_start_.begin(), by_start_.end(), 0);
    by_end_ = by_start_;
    std::sort(by_start_.begin(), by_start_.end(), [&](int a, int b) {
        return s_[static_cast<std::size_t>(a)] != s_[static_cast<std::size_t>(b)]
                   ? s_[static_cast<std::size_t>(a)] < s_[static_cast<std::size_t>(b)]
                   : a < b;
    });
    std::sort(by_end_.begin(), by_end_.end(), [&](int a, int b) {
        return e_[static_cast<std::size_t>(a)] != e_[static_cast<std::size_t>(b)]
                   ? e_[static_cast<std::size_t>(a)] < e_[static_cast<std::size_t>(b)]
                   : a < b;
    });
    starts_sorted_.reserve(static_cast<std::size_t>(n_));
    ends_sorted_.reserve(static_cast<std::size_t>(n_));
    for (int id : by_start_) starts_sorted_.push_back(s_[static_cast<std::size_t>(id)]);
    for (int id : by_end_) ends_sorted_.push_back(e_[static_cast<std::size_t>(id)]);
}

bool ArcIndex::raw_edge(int i, int j) const {
    return edge_raw(s_[static_cast<std::size_t>(i)], e_[static_cast<std::size_t>(i)],
                    s_[static_cast<std::size_t>(j)], e_[static_cast<std::size_t>(j)]);
}

DistanceRow ArcIndex::sssp(Vertex s, WorkCounter* wc) const {
    if (s < 1 || s > n_) throw std::out_of_range("source vertex out of range");
    WorkCounter local;
    WorkCounter& counter = wc ? *wc : local;
    DistanceRow row;
    row.source = s;
    row.dist.assign(static_cast<std::size_t>(n_), kUnreachable);
    const int src = s - 1;
    row.dist[static_cast<std::size_t>(src)] = 0;
    counter.touch();
    if (n_ == 1) return row;

    // The reached union is kept as one unrolled range [A, B]; it starts as
    // the source arc and only ever grows outward at both ends.
    const std::int64_t A0 = s_[static_cast<std::size_t>(src)];
    const std::int64_t B0 = A0 + len_[static_cast<std::size_t>(src)];
    std::int64_t A = A0;
    std::int64_t B = B0;
    bool saturated = B - A >= circ_ - 1;
    int assigned = 1;

    auto extend = [&](int v) {
        if (saturated) return;
        const std::int64_t low0 = A + mod_c(s_[static_cast<std::size_t>(v)] - A, circ_);
        const std::int64_t len = len_[static_cast<std::size_t>(v)];
        for (int k = -1; k <= 1; ++k) {
            const std::int64_t lo = low0 + static_cast<std::int64_t>(k) * circ_;
            const std::int64_t hi = lo + len;
            if (hi >= A && lo <= B) {
                A = std::min(A, lo);
                B = std::max(B, hi);
            }
        }
        saturated = B - A >= circ_ - 1;
    };

    // Layer 1 is a plain adjacency scan against the source arc. Later layers
    // only catch arcs with an endpoint poking out of the reached span, so an
    // arc containing the whole span must be picked up here (any such arc
    // already covers the source arc).
    for (int v = 0; v < n_; ++v) {
        if (v == src) continue;
        counter.touch();
        if (raw_edge(src, v)) {
            row.dist[static_cast<std::size_t>(v)] = 1;
            counter.touch();
            ++assigned;
            extend(v);
        }
    }
    if (assigned == 1) return row; // nothing touches the source arc
    counter.layer_count = 1;
    if (assigned == n_) return row;

    // Four monotone cursors anchored at the source arc: the span boundary
    // moves outward monotonically, so each cursor consumes every arc at most
    // once across all layers. Start- and end-sorted passes together see
    // every arc that protrudes into the span on either side.
    Cursor cw_s = make_cursor(by_start_, s_, starts_sorted_, +1, B0, circ_);
    Cursor cc_s = make_cursor(by_start_, s_, starts_sorted_, -1, A0, circ_);
    Cursor cw_e = make_cursor(by_end_, e_, ends_sorted_, +1, B0, circ_);
    Cursor cc_e = make_cursor(by_end_, e_, ends_sorted_, -1, A0, circ_);

    std::int64_t done_layer = 1;
    while (assigned < n_) {
        if (saturated) {
            // The reached union covers every position, so whatever is left
            // meets it in the very next layer.
            for (int v = 0; v < n_; ++v) {
                if (!row.dist[static_cast<std::size_t>(v)]) {
                    row.dist[static_cast<std::size_t>(v)] = done_layer + 1;
                    counter.touch();
                    ++assigned;
                }
            }
            counter.layer_count = done_layer + 1;
            break;
        }
        const std::int64_t cur_a = A;
        const std::int64_t cur_b = B;
        const int before = assigned;
        auto admit = [&](int v) {
            if (row.dist[static_cast<std::size_t>(v)]) return;
            row.dist[static_cast<std::size_t>(v)] = done_layer + 1;
            counter.touch();
            ++assigned;
            extend(v);
        };
        while (!cw_s.exhausted() && cw_s.coord(cw_s.peek()) <= cur_b) {
            counter.touch();
            admit(cw_s.peek());
            cw_s.advance();
        }
        while (!cc_s.exhausted() && cc_s.coord(cc_s.peek()) >= cur_a) {
            counter.touch();
            admit(cc_s.peek());
            cc_s.advance();
        }
        while (!cw_e.exhausted() && cw_e.coord(cw_e.peek()) <= cur_b) {
            counter.touch();
            admit(cw_e.peek());
            cw_e.advance();
        }
        while (!cc_e.exhausted() && cc_e.coord(cc_e.peek()) >= cur_a) {
            counter.touch();
            admit(cc_e.peek());
            cc_e.advance();
        }
        if (assigned == before) break; // span stalled; the rest is unreachable
        ++done_layer;
        counter.layer_count = done_layer;
        assert(A <= cur_a && B >= cur_b);
    }
    return row;
}

DistanceRow circ_sssp(const ArcRep& rep, Vertex s, WorkCounter* wc) {
    return ArcIndex(rep).sssp(s, wc);
}

WienerValue circ_wiener(const ArcRep& rep, int threads, WorkStats* stats) {
    validate(rep);
    const ArcIndex index(rep);
    return wiener_over_sources(
        rep.n, [&](Vertex s, WorkCounter& wc) { return index.sssp(s, &wc); }, threads, stats);
}

} // namespace wig
