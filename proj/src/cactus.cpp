#include "wig/cactus.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>
#include <utility>

#include "wig/oracle.hpp"

namespace wig {

namespace {

struct HalfEdge {
    Vertex to;
    Weight w;
    int edge_id;
};

// Recovers the cyclic vertex order of a block whose edge count equals its
// vertex count (degree 2 everywhere), then lays down prefix weight sums.
CycleBlock make_cycle_block(const std::vector<CactusRep::WeightedEdge>& edges, int block_id) {
    std::unordered_map<Vertex, std::vector<std::pair<Vertex, Weight>>> local;
    local.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        local[e.u].emplace_back(e.v, e.w);
        local[e.v].emplace_back(e.u, e.w);
    }
    for (const auto& [v, nbrs] : local) {
        if (nbrs.size() != 2)
            throw NotCactusError("block " + std::to_string(block_id) + ": vertex " +
                                 std::to_string(v) + " has degree " + std::to_string(nbrs.size()) +
                                 " inside a cycle block");
    }

    CycleBlock cb;
    cb.vertices.reserve(local.size());
    cb.prefix.reserve(local.size());
    Vertex start = edges.front().u;
    Vertex prev = -1;
    Vertex cur = start;
    Weight running = 0;
    do {
        cb.vertices.push_back(cur);
        cb.prefix.push_back(running);
        const auto& nbrs = local[cur];
        auto [next, w] = nbrs[0].first != prev ? nbrs[0] : nbrs[1];
        running = checked_add(running, w);
        prev = cur;
        cur = next;
    } while (cur != start);
    cb.total = running;
    return cb;
}

} // namespace

BlockCutTree validate_cactus(const CactusRep& rep) {
    const int n = rep.n;
    if (n < 1) throw std::invalid_argument("cactus requires n >= 1");
    for (const auto& e : rep.edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n));
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.w < 1) throw BadWeightError("edge weight must be >= 1, got " + std::to_string(e.w));
    }
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        pairs.reserve(rep.edges.size());
        for (const auto& e : rep.edges)
            pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(pairs.begin(), pairs.end());
        auto dup = std::adjacent_find(pairs.begin(), pairs.end());
        if (dup != pairs.end())
            throw NotCactusError("parallel edges " + std::to_string(dup->first) + "-" +
                                 std::to_string(dup->second) +
                                 " form a block with 2 vertices and 2 edges");
    }

    std::vector<std::vector<HalfEdge>> adj(static_cast<std::size_t>(n));
    for (int id = 0; id < static_cast<int>(rep.edges.size()); ++id) {
        const auto& e = rep.edges[static_cast<std::size_t>(id)];
        adj[static_cast<std::size_t>(e.u - 1)].push_back({e.v, e.w, id});
        adj[static_cast<std::size_t>(e.v - 1)].push_back({e.u, e.w, id});
    }

    // One DFS with an edge stack; a block is popped whenever a subtree cannot
    // reach above its attachment vertex.
    std::vector<int> disc(static_cast<std::size_t>(n), 0);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> edge_stack; // edge ids
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;

    BlockCutTree bct;
    bct.n = n;
    bct.blocks_of_vertex.assign(static_cast<std::size_t>(n), {});
    int timer = 0;
    int visited = 0;

    auto pop_block = [&](int tree_edge_id) {
        std::vector<CactusRep::WeightedEdge> block_edges;
        while (true) {
            int id = edge_stack.back();
            edge_stack.pop_back();
            block_edges.push_back(rep.edges[static_cast<std::size_t>(id)]);
            if (id == tree_edge_id) break;
        }
        const int block_id = static_cast<int>(bct.blocks.size());
        std::vector<Vertex> members;
        for (const auto& e : block_edges) {
            members.push_back(e.u);
            members.push_back(e.v);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());

        if (block_edges.size() == 1) {
            const auto& e = block_edges.front();
            bct.blocks.emplace_back(EdgeBlock{e.u, e.v, e.w});
        } else if (block_edges.size() == members.size()) {
            bct.blocks.emplace_back(make_cycle_block(block_edges, block_id));
        } else {
            throw NotCactusError("block " + std::to_string(block_id) + " has " +
                                 std::to_string(members.size()) + " vertices and " +
                                 std::to_string(block_edges.size()) +
                                 " edges; a cactus block is an edge or a cycle");
        }
        for (Vertex v : members)
            bct.blocks_of_vertex[static_cast<std::size_t>(v - 1)].push_back(block_id);
    };

    disc[0] = low[0] = ++timer;
    ++visited;
    stack.push_back({1, -1});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto& edges_of_v = adj[static_cast<std::size_t>(f.v - 1)];
        if (f.next < edges_of_v.size()) {
            const HalfEdge& he = edges_of_v[f.next++];
            Vertex w = he.to;
            if (disc[static_cast<std::size_t>(w - 1)] == 0) {
                disc[static_cast<std::size_t>(w - 1)] = low[static_cast<std::size_t>(w - 1)] =
                    ++timer;
                ++visited;
                edge_stack.push_back(he.edge_id);
                stack.push_back({w, f.v});
            } else if (w != f.parent &&
                       disc[static_cast<std::size_t>(w - 1)] < disc[static_cast<std::size_t>(f.v - 1)]) {
                edge_stack.push_back(he.edge_id);
                low[static_cast<std::size_t>(f.v - 1)] =
                    std::min(low[static_cast<std::size_t>(f.v - 1)],
                             disc[static_cast<std::size_t>(w - 1)]);
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            Frame& par = stack.back();
            low[static_cast<std::size_t>(par.v - 1)] =
                std::min(low[static_cast<std::size_t>(par.v - 1)],
                         low[static_cast<std::size_t>(done.v - 1)]);
            if (low[static_cast<std::size_t>(done.v - 1)] >=
                disc[static_cast<std::size_t>(par.v - 1)]) {
                // The tree edge par.v -> done.v closes a block.
                const auto& par_edges = adj[static_cast<std::size_t>(par.v - 1)];
                int tree_edge_id = par_edges[par.next - 1].edge_id;
                pop_block(tree_edge_id);
            }
        }
    }

    if (visited != n) throw NotConnectedError("cactus is not connected: reached " +
                                              std::to_string(visited) + " of " +
                                              std::to_string(n) + " vertices");
    assert(edge_stack.empty());

    for (Vertex v = 1; v <= n; ++v)
        if (bct.blocks_of_vertex[static_cast<std::size_t>(v - 1)].size() > 1)
            bct.cut_vertices.push_back(v);
    return bct;
}

DistanceRow cactus_sssp(const BlockCutTree& bct, Vertex s, WorkCounter* wc) {
    const int n = bct.n;
    if (s < 1 || s > n)
        throw std::out_of_range("source " + std::to_string(s) + " out of range 1.." +
                                std::to_string(n));
    WorkCounter local;
    WorkCounter& counter = wc ? *wc : local;

    DistanceRow row(s, n);
    row.at(s) = 0;
    counter.touch();

    std::vector<char> block_done(bct.blocks.size(), 0);
    std::vector<Vertex> queue{s};
    std::size_t head = 0;
    while (head < queue.size()) {
        Vertex x = queue[head++];
        std::int64_t dx = *row.at(x);
        for (int b : bct.blocks_of_vertex[static_cast<std::size_t>(x - 1)]) {
            if (block_done[static_cast<std::size_t>(b)]) continue;
            block_done[static_cast<std::size_t>(b)] = 1;
            const Block& block = bct.blocks[static_cast<std::size_t>(b)];
            if (const auto* eb = std::get_if<EdgeBlock>(&block)) {
                Vertex other = eb->u == x ? eb->v : eb->u;
                counter.touch();
                Dist& d = row.at(other);
                assert(!d);
                if (!d) {
                    d = checked_add(dx, eb->w);
                    queue.push_back(other);
                    counter.touch();
                }
            } else {
                const auto& cb = std::get<CycleBlock>(block);
                const std::size_t k = cb.vertices.size();
                std::size_t ix = 0;
                for (; ix < k; ++ix) {
                    counter.touch();
                    if (cb.vertices[ix] == x) break;
                }
                assert(ix < k);
                for (std::size_t iy = 0; iy < k; ++iy) {
                    if (iy == ix) continue;
                    Weight cw = cb.prefix[iy] - cb.prefix[ix];
                    if (cw < 0) cw += cb.total;
                    Weight d = std::min(cw, cb.total - cw);
                    Dist& dy = row.at(cb.vertices[iy]);
                    assert(!dy);
                    if (!dy) {
                        dy = checked_add(dx, d);
                        queue.push_back(cb.vertices[iy]);
                        counter.touch();
                    }
                }
            }
        }
    }
    return row;
}

WienerValue cactus_wiener(const CactusRep& rep, int threads, WorkStats* stats) {
    BlockCutTree bct = validate_cactus(rep);
    return wiener_over_sources(
        rep.n, [&bct](Vertex s, WorkCounter& wc) { return cactus_sssp(bct, s, &wc); }, threads,
        stats);
}

ExplicitGraph build_explicit(const CactusRep& rep) {
    ExplicitGraph g(rep.n, /*weighted=*/true);
    for (const auto& e : rep.edges) g.add_edge(e.u, e.v, e.w);
    return g;
}

} // namespace wig
