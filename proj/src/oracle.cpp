#include "wig/oracle.hpp"

#include <deque>
#include <exception>
#include <future>
#include <queue>
#include <thread>
#include <utility>
#include <vector>

namespace wig {

DistanceRow bfs_sssp(const ExplicitGraph& g, Vertex s) {
    if (g.weighted) throw std::invalid_argument("bfs_sssp requires an unweighted graph");
    g.check_vertex(s);
    DistanceRow row(s, g.n);
    row.at(s) = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        std::int64_t du = *row.at(u);
        for (const auto& e : g.neighbors(u)) {
            if (!row.at(e.to)) {
                row.at(e.to) = du + 1;
                queue.push_back(e.to);
            }
        }
    }
    return row;
}

DistanceRow dijkstra_sssp(const ExplicitGraph& g, Vertex s) {
    g.check_vertex(s);
    DistanceRow row(s, g.n);
    using Item = std::pair<std::int64_t, Vertex>; // (distance, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<char> done(static_cast<std::size_t>(g.n), 0);
    row.at(s) = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (done[static_cast<std::size_t>(u - 1)]) continue;
        done[static_cast<std::size_t>(u - 1)] = 1;
        for (const auto& e : g.neighbors(u)) {
            std::int64_t cand = checked_add(du, e.weight);
            Dist& dv = row.at(e.to);
            if (!dv || cand < *dv) {
                dv = cand;
                heap.emplace(cand, e.to);
            }
        }
    }
    return row;
}

WienerValue wiener_from_rows(std::span<const DistanceRow> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const DistanceRow& row : rows) {
        if (row.source < 1 || row.source > n || row.n() != n)
            throw std::invalid_argument("rows must cover sources 1..n with n entries each");
        if (seen[static_cast<std::size_t>(row.source - 1)]++)
            throw std::invalid_argument("duplicate source row " + std::to_string(row.source));
    }
    WienerAccumulator acc;
    for (const DistanceRow& row : rows) acc.add_row(row);
    return acc.finish();
}

WienerValue oracle_wiener(const ExplicitGraph& g) {
    std::vector<DistanceRow> rows;
    rows.reserve(static_cast<std::size_t>(g.n));
    for (Vertex s = 1; s <= g.n; ++s)
        rows.push_back(g.weighted ? dijkstra_sssp(g, s) : bfs_sssp(g, s));
    return wiener_from_rows(rows);
}

WienerValue wiener_over_sources(int n,
                                const std::function<DistanceRow(Vertex, WorkCounter&)>& row_fn,
                                int threads, WorkStats* stats) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    WienerAccumulator acc;
    WorkStats agg;

    auto run_range = [&row_fn](Vertex lo, Vertex hi) {
        // Returns the ordered partial sum plus counter aggregates for [lo, hi].
        WienerAccumulator part;
        WorkStats local;
        for (Vertex s = lo; s <= hi; ++s) {
            WorkCounter wc;
            part.add_row(row_fn(s, wc));
            local.absorb(wc);
        }
        return std::make_pair(part.ordered_sum(), local);
    };

    if (threads <= 1 || n < 2) {
        auto [sum, local] = run_range(1, n);
        acc.add_ordered(sum);
        agg.merge(local);
    } else {
        int k = std::min(threads, n);
        std::vector<std::future<std::pair<std::uint64_t, WorkStats>>> futures;
        futures.reserve(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) {
            Vertex lo = static_cast<Vertex>(1 + static_cast<std::int64_t>(n) * t / k);
            Vertex hi = static_cast<Vertex>(static_cast<std::int64_t>(n) * (t + 1) / k);
            futures.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& f : futures) {
            auto [sum, local] = f.get(); // rethrows worker exceptions
            acc.add_ordered(sum);
            agg.merge(local);
        }
    }
    if (stats) *stats = agg;
    return acc.finish();
}

} // namespace wig
