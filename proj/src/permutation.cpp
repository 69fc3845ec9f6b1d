#include "wig/permutation.hpp"

#include <stdexcept>
#include <string>

#include "wig/oracle.hpp"

namespace wig {

void validate(const PermutationRep& rep) {
    if (rep.n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (rep.pi.size() != static_cast<std::size_t>(rep.n))
        throw std::invalid_argument("permutation length does not match n");
    std::vector<char> seen(static_cast<std::size_t>(rep.n), 0);
    for (int p = 0; p < rep.n; ++p) {
        const int v = rep.pi[static_cast<std::size_t>(p)];
        if (v < 1 || v > rep.n)
            throw std::invalid_argument("position " + std::to_string(p + 1) + " holds " +
                                        std::to_string(v) + ", outside 1.." +
                                        std::to_string(rep.n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("value " + std::to_string(v) + " appears twice");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

std::vector<int> inverse_of(const PermutationRep& rep) {
    validate(rep);
    std::vector<int> pinv(static_cast<std::size_t>(rep.n));
    for (int p = 1; p <= rep.n; ++p) pinv[static_cast<std::size_t>(rep.pi[p - 1] - 1)] = p;
    return pinv;
}

bool perm_edge(const PermutationRep& rep, Vertex i, Vertex j) {
    if (i < 1 || i > rep.n || j < 1 || j > rep.n) throw std::out_of_range("vertex out of range");
    if (i == j) throw std::invalid_argument("adjacency is only defined for distinct vertices");
    const auto pinv = inverse_of(rep);
    const auto pi_ = static_cast<std::int64_t>(pinv[static_cast<std::size_t>(i - 1)]);
    const auto pj_ = static_cast<std::int64_t>(pinv[static_cast<std::size_t>(j - 1)]);
    return (static_cast<std::int64_t>(i) - j) * (pi_ - pj_) < 0;
}

ExplicitGraph build_explicit(const PermutationRep& rep) {
    const auto pinv = inverse_of(rep);
    ExplicitGraph g(rep.n, false);
    for (Vertex i = 1; i <= rep.n; ++i)
        for (Vertex j = i + 1; j <= rep.n; ++j)
            if (pinv[static_cast<std::size_t>(i - 1)] > pinv[static_cast<std::size_t>(j - 1)])
                g.add_edge_unchecked(i, j, 1);
    return g;
}

PermutationIndex::PermutationIndex(const PermutationRep& rep)
    : n_(rep.n), pinv_(inverse_of(rep)) {}

bool PermutationIndex::edge(Vertex i, Vertex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("vertex out of range");
    if (i == j) throw std::invalid_argument("adjacency is only defined for distinct vertices");
    const auto pi_ = static_cast<std::int64_t>(pinv_[static_cast<std::size_t>(i - 1)]);
    const auto pj_ = static_cast<std::int64_t>(pinv_[static_cast<std::size_t>(j - 1)]);
    return (static_cast<std::int64_t>(i) - j) * (pi_ - pj_) < 0;
}

DistanceRow PermutationIndex::sssp(Vertex s, WorkCounter* wc) const {
    if (s < 1 || s > n_) throw std::out_of_range("source vertex out of range");
    WorkCounter local;
    WorkCounter& counter = wc ? *wc : local;
    DistanceRow row;
    row.source = s;
    row.dist.assign(static_cast<std::size_t>(n_), kUnreachable);
    row.dist[static_cast<std::size_t>(s - 1)] = 0;
    counter.touch();
    if (n_ == 1) return row;

    std::int64_t layer = 0;
    bool any = true;
    while (any) {
        any = false;
        // Ascending values: j crosses some frontier value below it iff the
        // highest frontier position seen so far exceeds j's position.
        int best_lo = 0;
        for (int j = 1; j <= n_; ++j) {
            counter.touch();
            auto& d = row.dist[static_cast<std::size_t>(j - 1)];
            const int pj = pinv_[static_cast<std::size_t>(j - 1)];
            if (d) {
                if (*d == layer && pj > best_lo) best_lo = pj;
            } else if (best_lo > pj) {
                d = layer + 1;
                counter.touch();
                any = true;
            }
        }
        // Descending values: the mirror condition against the lowest
        // frontier position among larger values.
        int best_hi = n_ + 1;
        for (int j = n_; j >= 1; --j) {
            counter.touch();
            auto& d = row.dist[static_cast<std::size_t>(j - 1)];
            const int pj = pinv_[static_cast<std::size_t>(j - 1)];
            if (d) {
                if (*d == layer && pj < best_hi) best_hi = pj;
            } else if (best_hi < pj) {
                d = layer + 1;
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

DistanceRow perm_sssp(const PermutationRep& rep, Vertex s, WorkCounter* wc) {
    return PermutationIndex(rep).sssp(s, wc);
}

WienerValue perm_wiener(const PermutationRep& rep, int threads, WorkStats* stats) {
    validate(rep);
    const PermutationIndex index(rep);
    return wiener_over_sources(
        rep.n, [&](Vertex s, WorkCounter& wc) { return index.sssp(s, &wc); }, threads, stats);
}

} // namespace wig
