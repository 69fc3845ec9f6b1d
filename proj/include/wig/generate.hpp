#pragma once

#include <cstdint>

#include "wig/document.hpp"

namespace wig {

// Reproducible random instances: the same spec always yields the same
// document. When `require_connected` is set, generation retries a bounded
// number of times and then falls back to a deterministic repair, flagged in
// the result.
struct GenSpec {
    GraphClass cls = GraphClass::Interval;
    int n = 1;
    std::uint64_t seed = 1;
    bool require_connected = true;

    std::int64_t coord_span = 0;   // 0 = pick from n; interval/trapezoid/arc geometry
    double edge_block_prob = 0.5;  // cactus: chance a new block is a bridge
    double wrap_prob = 0.25;       // circular-arc: chance an arc crosses position 0
    std::int64_t max_weight = 8;   // cactus edge weights are 1..max_weight
};

struct Generated {
    InputDocument doc;
    bool augmented = false; // a connectivity repair was applied
};

Generated generate(const GenSpec& spec);

// True when every vertex is reachable from vertex 1 (vacuously for n <= 1).
bool is_connected(const InputDocument& doc);

} // namespace wig
