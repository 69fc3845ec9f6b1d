#pragma once

#include <vector>

#include "wig/graph.hpp"

namespace wig {

// Permutation diagram: value v is drawn as a segment from position v on the
// top line to position pos(v) on the bottom line. Vertices are values; two
// values are adjacent exactly when their segments cross, i.e. the value
// order and the position order disagree.
struct PermutationRep {
    int n = 0;
    std::vector<int> pi; // pi[p-1] = value written at position p
};

void validate(const PermutationRep& rep);

// pinv[v-1] = position of value v.
std::vector<int> inverse_of(const PermutationRep& rep);

// Spot-check form; builds the inverse on every call, so it costs O(n).
bool perm_edge(const PermutationRep& rep, Vertex i, Vertex j);

ExplicitGraph build_explicit(const PermutationRep& rep);

class PermutationIndex {
public:
    explicit PermutationIndex(const PermutationRep& rep);

    // BFS where each layer is admitted by two value-ordered sweeps: a value
    // joins when some frontier value below it sits at a later position, or
    // some frontier value above it sits at an earlier position. Running
    // max/min aggregates make a layer cost well under 8n touches.
    DistanceRow sssp(Vertex s, WorkCounter* wc = nullptr) const;

    bool edge(Vertex i, Vertex j) const;

    int n() const { return n_; }

private:
    int n_ = 0;
    std::vector<int> pinv_;
};

DistanceRow perm_sssp(const PermutationRep& rep, Vertex s, WorkCounter* wc = nullptr);

WienerValue perm_wiener(const PermutationRep& rep, int threads = 1, WorkStats* stats = nullptr);

} // namespace wig
