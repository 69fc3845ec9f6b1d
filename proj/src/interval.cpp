#include "wig/interval.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "wig/oracle.hpp"

namespace wig {

namespace {

// Sentinel headroom for sorts and span arithmetic.
constexpr std::int64_t kEndpointLimit = std::int64_t{1} << 62;

void check_index(const IntervalRep& rep, Vertex i) {
    if (i < 1 || i > rep.n)
        throw std::out_of_range("vertex id " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rep.n));
}

} // namespace

void validate(const IntervalRep& rep) {
    if (rep.n < 0 || static_cast<std::size_t>(rep.n) != rep.intervals.size())
        throw std::invalid_argument("interval count does not match n");
    for (const auto& iv : rep.intervals) {
        if (iv.l > iv.r)
            throw std::invalid_argument("interval has l > r: " + std::to_string(iv.l) + " > " +
                                        std::to_string(iv.r));
        if (iv.l <= -kEndpointLimit || iv.r >= kEndpointLimit)
            throw std::invalid_argument("interval endpoint outside 63-bit range");
    }
}

bool interval_edge(const IntervalRep& rep, Vertex i, Vertex j) {
    check_index(rep, i);
    check_index(rep, j);
    if (i == j) throw std::invalid_argument("interval_edge requires i != j");
    const auto& a = rep.intervals[static_cast<std::size_t>(i - 1)];
    const auto& b = rep.intervals[static_cast<std::size_t>(j - 1)];
    return b.l <= a.r && a.l <= b.r;
}

ExplicitGraph build_explicit(const IntervalRep& rep) {
    validate(rep);
    ExplicitGraph g(rep.n);
    for (Vertex i = 1; i <= rep.n; ++i)
        for (Vertex j = i + 1; j <= rep.n; ++j)
            if (interval_edge(rep, i, j)) g.add_edge_unchecked(i, j);
    return g;
}

IntervalIndex::IntervalIndex(const IntervalRep& rep) : n_(rep.n) {
    validate(rep);
    l_.resize(static_cast<std::size_t>(n_));
    r_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        l_[static_cast<std::size_t>(i)] = rep.intervals[static_cast<std::size_t>(i)].l;
        r_[static_cast<std::size_t>(i)] = rep.intervals[static_cast<std::size_t>(i)].r;
    }
    by_left_.resize(static_cast<std::size_t>(n_));
    by_right_.resize(static_cast<std::size_t>(n_));
    std::iota(by_left_.begin(), by_left_.end(), 0);
    std::iota(by_right_.begin(), by_right_.end(), 0);
    std::sort(by_left_.begin(), by_left_.end(), [this](int a, int b) {
        return l_[static_cast<std::size_t>(a)] != l_[static_cast<std::size_t>(b)]
                   ? l_[static_cast<std::size_t>(a)] < l_[static_cast<std::size_t>(b)]
                   : a < b;
    });
    std::sort(by_right_.begin(), by_right_.end(), [this](int a, int b) {
        return r_[static_cast<std::size_t>(a)] != r_[static_cast<std::size_t>(b)]
                   ? r_[static_cast<std::size_t>(a)] > r_[static_cast<std::size_t>(b)]
                   : a < b;
    });
}

DistanceRow IntervalIndex::sssp(Vertex s, WorkCounter* wc) const {
    if (s < 1 || s > n_)
        throw std::out_of_range("source " + std::to_string(s) + " out of range 1.." +
                                std::to_string(n_));
    WorkCounter local;
    WorkCounter& counter = wc ? *wc : local;

    DistanceRow row(s, n_);
    row.at(s) = 0;
    counter.touch();

    const int src = s - 1;
    std::int64_t span_l = l_[static_cast<std::size_t>(src)];
    std::int64_t span_r = r_[static_cast<std::size_t>(src)];
    std::size_t pl = 0; // into by_left_, catches intervals entering on the right
    std::size_t pr = 0; // into by_right_, catches intervals entering on the left
    std::int64_t layer = 0;

    while (true) {
        const std::int64_t cur_l = span_l;
        const std::int64_t cur_r = span_r;
        bool grew = false;
        auto admit = [&](int v) {
            Dist& d = row.dist[static_cast<std::size_t>(v)];
            if (d) return;
            d = layer + 1;
            span_l = std::min(span_l, l_[static_cast<std::size_t>(v)]);
            span_r = std::max(span_r, r_[static_cast<std::size_t>(v)]);
            grew = true;
            counter.touch();
        };
        while (pl < by_left_.size() && l_[static_cast<std::size_t>(by_left_[pl])] <= cur_r) {
            int v = by_left_[pl++];
            counter.touch();
            // Strictly left of the span: the right-descending sweep owns it.
            if (r_[static_cast<std::size_t>(v)] >= cur_l) admit(v);
        }
        while (pr < by_right_.size() && r_[static_cast<std::size_t>(by_right_[pr])] >= cur_l) {
            int v = by_right_[pr++];
            counter.touch();
            if (l_[static_cast<std::size_t>(v)] <= cur_r) admit(v);
        }
        if (!grew) break;
        // The reached union is contiguous, so the span only ever grows.
        assert(span_l <= cur_l && span_r >= cur_r);
        ++layer;
        counter.layer_count = static_cast<std::uint64_t>(layer);
    }
    return row;
}

DistanceRow interval_sssp(const IntervalRep& rep, Vertex s, WorkCounter* wc) {
    return IntervalIndex(rep).sssp(s, wc);
}

WienerValue interval_wiener(const IntervalRep& rep, int threads, WorkStats* stats) {
    IntervalIndex index(rep);
    return wiener_over_sources(
        rep.n, [&index](Vertex s, WorkCounter& wc) { return index.sssp(s, &wc); }, threads, stats);
}

} // namespace wig
