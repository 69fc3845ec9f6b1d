#include "wig/trapezoid.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wig/oracle.hpp"

namespace wig {
namespace {

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 62;

bool left_of(const TrapezoidRep::Trap& x, const TrapezoidRep::Trap& y) {
    return x.b < y.a && x.d < y.c;
}

} // namespace

void validate(const TrapezoidRep& rep) {
    if (rep.n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (rep.traps.size() != static_cast<std::size_t>(rep.n))
        throw std::invalid_argument("trapezoid count does not match n");
    for (int i = 0; i < rep.n; ++i) {
        const auto& t = rep.traps[static_cast<std::size_t>(i)];
        if (t.a > t.b || t.c > t.d)
            throw std::invalid_argument("trapezoid " + std::to_string(i + 1) +
                                        " has inverted sides");
        for (std::int64_t x : {t.a, t.b, t.c, t.d})
            if (x < -kCoordLimit || x > kCoordLimit)
                throw std::invalid_argument("trapezoid " + std::to_string(i + 1) +
                                            " has out-of-range corners");
    }
}

bool trap_edge(const TrapezoidRep& rep, Vertex i, Vertex j) {
    if (i < 1 || i > rep.n || j < 1 || j > rep.n) throw std::out_of_range("vertex out of range");
    if (i == j) throw std::invalid_argument("adjacency is only defined for distinct vertices");
    const auto& x = rep.traps[static_cast<std::size_t>(i - 1)];
    const auto& y = rep.traps[static_cast<std::size_t>(j - 1)];
    return !left_of(x, y) && !left_of(y, x);
}

ExplicitGraph build_explicit(const TrapezoidRep& rep) {
    validate(rep);
    ExplicitGraph g(rep.n, false);
    for (Vertex i = 1; i <= rep.n; ++i)
        for (Vertex j = i + 1; j <= rep.n; ++j)
            if (trap_edge(rep, i, j)) g.add_edge_unchecked(i, j, 1);
    return g;
}

TrapezoidRep trap_from_interval(const IntervalRep& rep) {
    validate(rep);
    TrapezoidRep out;
    out.n = rep.n;
    out.traps.reserve(static_cast<std::size_t>(rep.n));
    for (const auto& iv : rep.intervals) out.traps.push_back({iv.l, iv.r, iv.l, iv.r});
    return out;
}

TrapezoidRep trap_from_permutation(const PermutationRep& rep) {
    const auto pinv = inverse_of(rep);
    TrapezoidRep out;
    out.n = rep.n;
    out.traps.reserve(static_cast<std::size_t>(rep.n));
    for (int v = 1; v <= rep.n; ++v) {
        const auto p = static_cast<std::int64_t>(pinv[static_cast<std::size_t>(v - 1)]);
        out.traps.push_back({v, v, p, p});
    }
    return out;
}

TrapezoidIndex::TrapezoidIndex(const TrapezoidRep& rep) {
    validate(rep);
    n_ = rep.n;
    const auto sz = static_cast<std::size_t>(n_);
    a_.resize(sz);
    b_.resize(sz);
    c_.resize(sz);
    d_.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        a_[i] = rep.traps[i].a;
        b_[i] = rep.traps[i].b;
        c_[i] = rep.traps[i].c;
        d_[i] = rep.traps[i].d;
    }
    by_a_.resize(sz);
    std::iota(by_a_.begin(), by_a_.end(), 0);
    by_c_ = by_a_;
    std::sort(by_a_.begin(), by_a_.end(), [&](int x, int y) {
        return a_[static_cast<std::size_t>(x)] != a_[static_cast<std::size_t>(y)]
                   ? a_[static_cast<std::size_t>(x)] < a_[static_cast<std::size_t>(y)]
                   : x < y;
    });
    std::sort(by_c_.begin(), by_c_.end(), [&](int x, int y) {
        return c_[static_cast<std::size_t>(x)] != c_[static_cast<std::size_t>(y)]
                   ? c_[static_cast<std::size_t>(x)] < c_[static_cast<std::size_t>(y)]
                   : x < y;
    });
    std::vector<std::int64_t> a_sorted, c_sorted;
    a_sorted.reserve(sz);
    c_sorted.reserve(sz);
    for (int id : by_a_) a_sorted.push_back(a_[static_cast<std::size_t>(id)]);
    for (int id : by_c_) c_sorted.push_back(c_[static_cast<std::size_t>(id)]);
    rk_b_a_.resize(sz);
    rk_d_c_.resize(sz);
    for (std::size_t j = 0; j < sz; ++j) {
        rk_b_a_[j] = static_cast<int>(std::upper_bound(a_sorted.begin(), a_sorted.end(), b_[j]) -
                                      a_sorted.begin());
        rk_d_c_[j] = static_cast<int>(std::upper_bound(c_sorted.begin(), c_sorted.end(), d_[j]) -
                                      c_sorted.begin());
    }
}

bool TrapezoidIndex::edge(Vertex i, Vertex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("vertex out of range");
    if (i == j) throw std::invalid_argument("adjacency is only defined for distinct vertices");
    const auto x = static_cast<std::size_t>(i - 1);
    const auto y = static_cast<std::size_t>(j - 1);
    const bool x_left = b_[x] < a_[y] && d_[x] < c_[y];
    const bool y_left = b_[y] < a_[x] && d_[y] < c_[x];
    return !x_left && !y_left;
}

DistanceRow TrapezoidIndex::sssp(Vertex s, WorkCounter* wc) const {
    if (s < 1 || s > n_) throw std::out_of_range("source vertex out of range");
    WorkCounter local;
    WorkCounter& counter = wc ? *wc : local;
    DistanceRow row;
    row.source = s;
    row.dist.assign(static_cast<std::size_t>(n_), kUnreachable);
    row.dist[static_cast<std::size_t>(s - 1)] = 0;
    counter.touch();
    if (n_ == 1) return row;

    // "Some frontier trapezoid overlaps j" splits into four one-sided
    // conditions; each asks for a prefix maximum of b or d over frontier
    // members with small enough a (or c), so two sweeps per layer suffice.
    // The witness ids feed the debug cross-check below.
    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();
    const auto sz = static_cast<std::size_t>(n_);
    std::vector<std::int64_t> pref_b_a(sz + 1), pref_d_a(sz + 1), pref_d_c(sz + 1),
        pref_b_c(sz + 1);
    std::vector<int> wit_b_a(sz + 1), wit_d_a(sz + 1), wit_d_c(sz + 1), wit_b_c(sz + 1);

    std::int64_t layer = 0;
    bool any = true;
    while (any) {
        any = false;
        pref_b_a[0] = pref_d_a[0] = pref_d_c[0] = pref_b_c[0] = kNone;
        wit_b_a[0] = wit_d_a[0] = wit_d_c[0] = wit_b_c[0] = -1;
        std::int64_t max_b = kNone, max_d = kNone;
        int who_b = -1, who_d = -1;
        for (std::size_t t = 1; t <= sz; ++t) {
            const int id = by_a_[t - 1];
            counter.touch();
            const auto& d = row.dist[static_cast<std::size_t>(id)];
            if (d && *d == layer) {
                if (b_[static_cast<std::size_t>(id)] > max_b) {
                    max_b = b_[static_cast<std::size_t>(id)];
                    who_b = id;
                }
                if (d_[static_cast<std::size_t>(id)] > max_d) {
                    max_d = d_[static_cast<std::size_t>(id)];
                    who_d = id;
                }
            }
            pref_b_a[t] = max_b;
            wit_b_a[t] = who_b;
            pref_d_a[t] = max_d;
            wit_d_a[t] = who_d;
        }
        max_b = max_d = kNone;
        who_b = who_d = -1;
        for (std::size_t t = 1; t <= sz; ++t) {
            const int id = by_c_[t - 1];
            counter.touch();
            const auto& d = row.dist[static_cast<std::size_t>(id)];
            if (d && *d == layer) {
                if (b_[static_cast<std::size_t>(id)] > max_b) {
                    max_b = b_[static_cast<std::size_t>(id)];
                    who_b = id;
                }
                if (d_[static_cast<std::size_t>(id)] > max_d) {
                    max_d = d_[static_cast<std::size_t>(id)];
                    who_d = id;
                }
            }
            pref_d_c[t] = max_d;
            wit_d_c[t] = who_d;
            pref_b_c[t] = max_b;
            wit_b_c[t] = who_b;
        }
        for (std::size_t j = 0; j < sz; ++j) {
            if (row.dist[j]) continue;
            counter.touch();
            const auto ra = static_cast<std::size_t>(rk_b_a_[j]);
            const auto rc = static_cast<std::size_t>(rk_d_c_[j]);
            int witness = -1;
            if (pref_b_a[ra] >= a_[j]) witness = wit_b_a[ra];
            else if (pref_d_c[rc] >= c_[j]) witness = wit_d_c[rc];
            else if (pref_b_c[rc] >= a_[j]) witness = wit_b_c[rc];
            else if (pref_d_a[ra] >= c_[j]) witness = wit_d_a[ra];
            if (witness >= 0) {
                assert(edge(witness + 1, static_cast<Vertex>(j) + 1));
                row.dist[j] = layer + 1;
                counter.touch();
                any = true;
            }
        }
        if (!any) break;
        ++layer;
        counter.layer_count = layer;
    }
    return row;
}

DistanceRow trap_sssp(const TrapezoidRep& rep, Vertex s, WorkCounter* wc) {
    return TrapezoidIndex(rep).sssp(s, wc);
}

WienerValue trap_wiener(const TrapezoidRep& rep, int threads, WorkStats* stats) {
    validate(rep);
    const TrapezoidIndex index(rep);
    return wiener_over_sources(
        rep.n, [&](Vertex s, WorkCounter& wc) { return index.sssp(s, &wc); }, threads, stats);
}

} // namespace wig
