#include "wig/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "wig/rng.hpp"

namespace wig {
namespace {

constexpr int kAttempts = 64;

std::pair<std::int64_t, std::int64_t> draw_span(SplitMix64& rng, std::int64_t span) {
    // Mix wide, short and near-point pieces so instances cover nesting,
    // chains and twins.
    switch (rng.below(3)) {
    case 0: {
        auto x = rng.range(0, span);
        auto y = rng.range(0, span);
        if (x > y) std::swap(x, y);
        return {x, y};
    }
    case 1: {
        const auto len = static_cast<std::int64_t>(
            rng.below(static_cast<std::uint64_t>(std::max<std::int64_t>(1, span / 8)) + 1));
        const auto l = rng.range(0, span - len);
        return {l, l + len};
    }
    default: {
        const auto l = rng.range(0, span);
        const auto len = static_cast<std::int64_t>(rng.below(2));
        return {l, std::min(span, l + len)};
    }
    }
}

IntervalRep gen_interval(int n, std::int64_t span, SplitMix64& rng) {
    IntervalRep rep;
    rep.n = n;
    rep.intervals.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto [l, r] = draw_span(rng, span);
        rep.intervals.push_back({l, r});
    }
    return rep;
}

TrapezoidRep gen_trapezoid(int n, std::int64_t span, SplitMix64& rng) {
    TrapezoidRep rep;
    rep.n = n;
    rep.traps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto [a, b] = draw_span(rng, span);
        const auto [c, d] = draw_span(rng, span);
        rep.traps.push_back({a, b, c, d});
    }
    return rep;
}

ArcRep gen_arc(int n, std::int64_t circ, double wrap_prob, SplitMix64& rng) {
    ArcRep rep;
    rep.n = n;
    rep.circumference = circ;
    rep.arcs.reserve(static_cast<std::size_t>(n));
    const std::int64_t hmax = std::max<std::int64_t>(2, circ / 4);
    for (int i = 0; i < n; ++i) {
        if (rng.unit() < wrap_prob) {
            const std::int64_t sp = std::max<std::int64_t>(1, std::min(hmax, circ / 4));
            const std::int64_t s = circ - 1 - static_cast<std::int64_t>(
                                                  rng.below(static_cast<std::uint64_t>(sp)));
            const std::int64_t e =
                static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(sp)));
            rep.arcs.push_back({s, e});
        } else {
            const std::int64_t s = rng.range(0, circ - 2);
            const std::int64_t len =
                1 + static_cast<std::int64_t>(rng.below(
                        static_cast<std::uint64_t>(std::min(hmax, circ - 1 - s))));
            rep.arcs.push_back({s, s + len});
        }
    }
    return rep;
}

PermutationRep gen_permutation(int n, SplitMix64& rng) {
    PermutationRep rep;
    rep.n = n;
    rep.pi.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rep.pi[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(rep.pi[static_cast<std::size_t>(i)], rep.pi[static_cast<std::size_t>(j)]);
    }
    return rep;
}

CactusRep gen_cactus(int n, double edge_prob, std::int64_t max_w, SplitMix64& rng) {
    CactusRep rep;
    rep.n = n;
    if (n <= 1) return rep;
    auto weight = [&] {
        return 1 + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(max_w)));
    };
    int built = 1;
    while (built < n) {
        const int remaining = n - built;
        const auto attach = 1 + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(built)));
        if (remaining < 2 || rng.unit() < edge_prob) {
            const auto nv = static_cast<Vertex>(++built);
            rep.edges.push_back({attach, nv, weight()});
        } else {
            // cycle of length 3..8, glued to the tree at one vertex
            const auto options = static_cast<std::uint64_t>(std::min(6, remaining - 1));
            const int len = 3 + static_cast<int>(rng.below(options));
            Vertex prev = attach;
            for (int k = 1; k < len; ++k) {
                const auto nv = static_cast<Vertex>(++built);
                rep.edges.push_back({prev, nv, weight()});
                prev = nv;
            }
            rep.edges.push_back({prev, attach, weight()});
        }
    }
    return rep;
}

InputDocument make_one(const GenSpec& spec, std::int64_t span, SplitMix64& rng) {
    InputDocument doc;
    doc.cls = spec.cls;
    switch (spec.cls) {
    case GraphClass::Interval: doc.rep = gen_interval(spec.n, span, rng); break;
    case GraphClass::Trapezoid: doc.rep = gen_trapezoid(spec.n, span, rng); break;
    case GraphClass::CircularArc:
        doc.rep = gen_arc(spec.n, std::max<std::int64_t>(2, span), spec.wrap_prob, rng);
        break;
    case GraphClass::Permutation: doc.rep = gen_permutation(spec.n, rng); break;
    case GraphClass::Cactus:
        doc.rep = gen_cactus(spec.n, spec.edge_block_prob, spec.max_weight, rng);
        break;
    }
    return doc;
}

void repair_interval(IntervalRep& rep) {
    std::vector<int> order(static_cast<std::size_t>(rep.n));
    for (int i = 0; i < rep.n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return rep.intervals[static_cast<std::size_t>(x)].l <
               rep.intervals[static_cast<std::size_t>(y)].l;
    });
    // stretch whichever interval currently reaches furthest right across
    // each gap in the left-to-right sweep
    int carrier = order.front();
    for (std::size_t k = 1; k < order.size(); ++k) {
        const int id = order[static_cast<std::size_t>(k)];
        auto& cur = rep.intervals[static_cast<std::size_t>(id)];
        auto& reach = rep.intervals[static_cast<std::size_t>(carrier)];
        if (cur.l > reach.r) reach.r = cur.l;
        if (cur.r > reach.r) carrier = id;
    }
}

void repair_permutation(PermutationRep& rep) {
    // A cut happens exactly when a prefix of positions holds exactly the
    // values 1..p; swapping across that boundary removes it for good.
    int m = 0;
    for (int p = 1; p < rep.n; ++p) {
        m = std::max(m, rep.pi[static_cast<std::size_t>(p - 1)]);
        if (m == p) {
            std::swap(rep.pi[static_cast<std::size_t>(p - 1)],
                      rep.pi[static_cast<std::size_t>(p)]);
            m = std::max(m, rep.pi[static_cast<std::size_t>(p - 1)]);
        }
    }
}

void repair_trapezoid(TrapezoidRep& rep) {
    const DistanceRow row = trap_sssp(rep, 1);
    auto& t0 = rep.traps.front();
    for (int v = 0; v < rep.n; ++v) {
        if (row.dist[static_cast<std::size_t>(v)]) continue;
        const auto& u = rep.traps[static_cast<std::size_t>(v)];
        // growing a trapezoid never loses an edge, so hulling the stragglers
        // into trapezoid 1 leaves the reached part intact
        t0.a = std::min(t0.a, u.a);
        t0.b = std::max(t0.b, u.b);
        t0.c = std::min(t0.c, u.c);
        t0.d = std::max(t0.d, u.d);
    }
}

void repair_arc(ArcRep& rep) {
    // blunt but sound: arc 1 grows to length C-1 and meets everything
    auto& a0 = rep.arcs.front();
    a0.e = a0.s == 0 ? rep.circumference - 1 : a0.s - 1;
}

InputDocument repair(InputDocument doc) {
    switch (doc.cls) {
    case GraphClass::Interval: repair_interval(std::get<IntervalRep>(doc.rep)); break;
    case GraphClass::Permutation: repair_permutation(std::get<PermutationRep>(doc.rep)); break;
    case GraphClass::Trapezoid: repair_trapezoid(std::get<TrapezoidRep>(doc.rep)); break;
    case GraphClass::CircularArc: repair_arc(std::get<ArcRep>(doc.rep)); break;
    case GraphClass::Cactus: break; // construction is connected already
    }
    return doc;
}

} // namespace

bool is_connected(const InputDocument& doc) {
    const int n = doc.n();
    if (n <= 1) return true;
    DistanceRow row;
    switch (doc.cls) {
    case GraphClass::Cactus:
        try {
            validate_cactus(std::get<CactusRep>(doc.rep));
        } catch (const NotConnectedError&) {
            return false;
        }
        return true;
    case GraphClass::Interval: row = interval_sssp(std::get<IntervalRep>(doc.rep), 1); break;
    case GraphClass::CircularArc: row = circ_sssp(std::get<ArcRep>(doc.rep), 1); break;
    case GraphClass::Permutation: row = perm_sssp(std::get<PermutationRep>(doc.rep), 1); break;
    case GraphClass::Trapezoid: row = trap_sssp(std::get<TrapezoidRep>(doc.rep), 1); break;
    }
    return std::all_of(row.dist.begin(), row.dist.end(),
                       [](const Dist& d) { return d.has_value(); });
}

Generated generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be positive");
    if (spec.max_weight < 1) throw std::invalid_argument("max weight must be positive");
    if (spec.edge_block_prob < 0.0 || spec.edge_block_prob > 1.0)
        throw std::invalid_argument("edge block probability must be in [0, 1]");
    if (spec.wrap_prob < 0.0 || spec.wrap_prob > 1.0)
        throw std::invalid_argument("wrap probability must be in [0, 1]");
    if (spec.coord_span < 0) throw std::invalid_argument("coordinate span must be nonnegative");

    const std::int64_t span =
        spec.coord_span > 0 ? spec.coord_span
                            : std::max<std::int64_t>(8, 4 * static_cast<std::int64_t>(spec.n));

    SplitMix64 rng(spec.seed);
    Generated out;
    InputDocument last;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        last = make_one(spec, span, rng);
        if (!spec.require_connected || is_connected(last)) {
            out.doc = std::move(last);
            return out;
        }
    }
    out.doc = repair(std::move(last));
    out.augmented = true;
    if (!is_connected(out.doc))
        throw GenerationFailedError("connectivity repair failed for " +
                                    std::string(class_name(spec.cls)) + " n=" +
                                    std::to_string(spec.n));
    return out;
}

} // namespace wig
