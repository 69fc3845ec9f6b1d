#pragma once

#include <variant>
#include <vector>

#include "wig/graph.hpp"

namespace wig {

// Weighted cactus: connected, every block a single edge or a simple cycle.
struct CactusRep {
    struct WeightedEdge {
        Vertex u;
        Vertex v;
        Weight w;
    };

    int n = 0;
    std::vector<WeightedEdge> edges;
};

// A block that is one edge.
struct EdgeBlock {
    Vertex u;
    Vertex v;
    Weight w;
};

// A block that is a simple cycle. vertices holds the cyclic order;
// prefix[i] is the clockwise weight sum from vertices[0] to vertices[i]
// (prefix[0] = 0, strictly increasing); total closes the cycle.
struct CycleBlock {
    std::vector<Vertex> vertices;
    std::vector<Weight> prefix;
    Weight total = 0;
};

using Block = std::variant<EdgeBlock, CycleBlock>;

// Biconnected decomposition of a validated cactus. Immutable after
// validation; distinct-source SSSP runs may share it concurrently.
struct BlockCutTree {
    int n = 0;
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;             // sorted
    std::vector<std::vector<int>> blocks_of_vertex; // per vertex (v-1), block ids

    bool is_cut_vertex(Vertex v) const {
        return blocks_of_vertex.at(static_cast<std::size_t>(v - 1)).size() > 1;
    }
};

// Decomposes and checks the cactus property. One DFS with an edge stack.
// Throws std::invalid_argument on a malformed edge list, BadWeightError,
// NotConnectedError, or NotCactusError naming the offending block.
BlockCutTree validate_cactus(const CactusRep& rep);

// Weighted distances from s. Each block is expanded once from its entry
// vertex; inside a cycle both directions are compared via the prefix sums.
// Touches per run stay within 8n.
DistanceRow cactus_sssp(const BlockCutTree& bct, Vertex s, WorkCounter* wc = nullptr);

// n SSSP runs reduced into the Wiener value (O(n^2) total work).
WienerValue cactus_wiener(const CactusRep& rep, int threads = 1, WorkStats* stats = nullptr);

// Explicit weighted graph over the same edges; the oracle substrate.
ExplicitGraph build_explicit(const CactusRep& rep);

} // namespace wig
