#include <doctest.h>

#include <cstdint>
#include <variant>

#include "helpers.hpp"
#include "wig/cactus.hpp"
#include "wig/document.hpp"
#include "wig/generate.hpp"

using namespace wig;

namespace {

constexpr GraphClass kAllClasses[] = {GraphClass::Cactus, GraphClass::Interval,
                                      GraphClass::CircularArc, GraphClass::Permutation,
                                      GraphClass::Trapezoid};

GenSpec spec_of(GraphClass cls, int n, std::uint64_t seed) {
    GenSpec spec;
    spec.cls = cls;
    spec.n = n;
    spec.seed = seed;
    return spec;
}

} // namespace

TEST_SUITE_BEGIN("generate");

TEST_CASE("the same spec always yields the same document") {
    for (GraphClass cls : kAllClasses) {
        auto a = serialize_document(generate(spec_of(cls, 33, 7)).doc);
        auto b = serialize_document(generate(spec_of(cls, 33, 7)).doc);
        CHECK(a == b);
        auto c = serialize_document(generate(spec_of(cls, 33, 8)).doc);
        CHECK(a != c);
    }
}

TEST_CASE("tuning knobs change the draw but stay deterministic") {
    GenSpec wide = spec_of(GraphClass::Interval, 24, 5);
    wide.coord_span = 100'000;
    auto a = serialize_document(generate(wide).doc);
    auto b = serialize_document(generate(wide).doc);
    CHECK(a == b);
    GenSpec narrow = wide;
    narrow.coord_span = 10;
    CHECK(serialize_document(generate(narrow).doc) != a);
}

TEST_CASE("generated instances are valid, connected and parseable") {
    for (GraphClass cls : kAllClasses)
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            auto got = generate(spec_of(cls, 1 + static_cast<int>(seed % 37), seed));
            CHECK(is_connected(got.doc));
            auto text = serialize_document(got.doc);
            CHECK(serialize_document(parse_document(text)) == text);
            if (cls == GraphClass::Cactus)
                CHECK_NOTHROW(validate_cactus(std::get<CactusRep>(got.doc.rep)));
        }
}

TEST_CASE("single-vertex instances come out whole") {
    for (GraphClass cls : kAllClasses) {
        auto got = generate(spec_of(cls, 1, 3));
        CHECK(got.doc.n() == 1);
        CHECK(is_connected(got.doc));
        CHECK_FALSE(got.augmented);
    }
}

TEST_CASE("disconnection is allowed when asked for") {
    // The identity-heavy corner: tiny permutations are often disconnected.
    GenSpec spec = spec_of(GraphClass::Permutation, 2, 1);
    spec.require_connected = false;
    int disconnected = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        spec.seed = seed;
        if (!is_connected(generate(spec).doc)) ++disconnected;
    }
    CHECK(disconnected > 0);
}

TEST_CASE("bad specs are rejected up front") {
    CHECK_THROWS_AS(generate(spec_of(GraphClass::Interval, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of(GraphClass::Interval, -4, 1)), std::invalid_argument);
    GenSpec bad = spec_of(GraphClass::Cactus, 5, 1);
    bad.max_weight = 0;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
    bad = spec_of(GraphClass::Cactus, 5, 1);
    bad.edge_block_prob = 1.5;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
    bad = spec_of(GraphClass::CircularArc, 5, 1);
    bad.wrap_prob = -0.1;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
    bad = spec_of(GraphClass::Interval, 5, 1);
    bad.coord_span = -2;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("the retry loop almost always lands without repair") {
    for (GraphClass cls : kAllClasses)
        for (std::uint64_t seed = 100; seed < 130; ++seed)
            CHECK_FALSE(generate(spec_of(cls, 8, seed)).augmented);
}

TEST_CASE("a stubborn seed exhausts the retries and gets repaired") {
    // Found by scanning: with two intervals spread over a span of 1e9, this
    // seed draws a disconnected pair on all retries, so the result comes back
    // repaired.  The value is tied to the generator's exact draw sequence — if
    // that sequence ever changes, re-scan for a new stubborn seed (roughly one
    // per 5e8 seeds) or drop this case rather than keep a stale constant.
    GenSpec spec = spec_of(GraphClass::Interval, 2, 84983166);
    spec.coord_span = 1'000'000'000;
    const Generated out = generate(spec);
    CHECK(out.augmented);
    CHECK(is_connected(out.doc));
    const auto& rep = std::get<IntervalRep>(out.doc.rep);
    CHECK_NOTHROW(validate(rep));
    // repair anchors the second interval so the pair just touches
    CHECK(rep.intervals[1].l == rep.intervals[0].r);
    const std::string text = serialize_document(out.doc);
    CHECK(parse_document(text).n() == 2);
}

TEST_SUITE_END();
