#include <doctest.h>

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "wig/compute.hpp"
#include "wig/document.hpp"
#include "wig/generate.hpp"

using namespace wig;

namespace {

const char* kChainDoc = "wig 1 interval\n5\n1 3\n2 5\n4 7\n6 9\n8 10\n";
const char* kRingDoc = "wig 1 circular-arc\n4 8\n0 2\n2 4\n4 6\n6 0\n";

ComputeOptions options(Algo algo, Emit emit = Emit::Wiener,
                       OutputFormat format = OutputFormat::Plain, int threads = 1) {
    ComputeOptions opt;
    opt.algo = algo;
    opt.emit = emit;
    opt.format = format;
    opt.threads = threads;
    return opt;
}

} // namespace

TEST_SUITE_BEGIN("compute");

TEST_CASE("plain wiener output is the bare number") {
    auto doc = parse_document(kChainDoc);
    auto fast = run_compute(doc, options(Algo::Specialized));
    CHECK(fast.output == "20\n");
    CHECK(fast.wiener == WienerValue{20});
    CHECK(fast.n == 5);
    CHECK(fast.stats.sources == 5);

    auto slow = run_compute(doc, options(Algo::Oracle));
    CHECK(slow.output == "20\n");
    CHECK(slow.stats.sources == 0); // oracle runs report no counters

    CHECK(run_compute(parse_document(kRingDoc), options(Algo::Oracle)).output == "8\n");
}

TEST_CASE("plain distance output is one row per source") {
    auto doc = parse_document("wig 1 interval\n3\n1 2\n2 3\n3 4\n");
    for (Algo algo : {Algo::Specialized, Algo::Oracle})
        CHECK(run_compute(doc, options(algo, Emit::Distances)).output == "0 1 2\n1 0 1\n2 1 0\n");
}

TEST_CASE("unreachable entries print as dashes instead of failing") {
    auto doc = parse_document("wig 1 permutation\n4\n2 1 4 3\n");
    auto got = run_compute(doc, options(Algo::Specialized, Emit::Distances));
    CHECK(got.output == "0 1 - -\n1 0 - -\n- - 0 1\n- - 1 0\n");
    CHECK_FALSE(got.wiener.has_value());
}

TEST_CASE("json output carries the run description") {
    auto doc = parse_document(kChainDoc);
    auto got = run_compute(doc, options(Algo::Specialized, Emit::Wiener, OutputFormat::Json));
    auto j = nlohmann::json::parse(got.output);
    CHECK(j["class"] == "interval");
    CHECK(j["n"] == 5);
    CHECK(j["algo"] == "specialized");
    CHECK(j["wiener"] == 20);
    CHECK(j["work"]["max_visits_per_source"].get<std::uint64_t>() > 0);
    CHECK(j["work"]["total_visits"].get<std::uint64_t>() >=
          j["work"]["max_visits_per_source"].get<std::uint64_t>());

    auto oracle = run_compute(doc, options(Algo::Oracle, Emit::Wiener, OutputFormat::Json));
    auto jo = nlohmann::json::parse(oracle.output);
    CHECK(jo["algo"] == "oracle");
    CHECK_FALSE(jo.contains("work"));

    auto dist = run_compute(parse_document("wig 1 permutation\n2\n1 2\n"),
                            options(Algo::Specialized, Emit::Distances, OutputFormat::Json));
    auto jd = nlohmann::json::parse(dist.output);
    CHECK(jd["distances"][0][0] == 0);
    CHECK(jd["distances"][0][1].is_null());
}

TEST_CASE("specialized and oracle agree across generated documents") {
    for (GraphClass cls : {GraphClass::Cactus, GraphClass::Interval, GraphClass::CircularArc,
                           GraphClass::Permutation, GraphClass::Trapezoid})
        for (std::uint64_t seed = 70; seed < 80; ++seed) {
            GenSpec spec;
            spec.cls = cls;
            spec.n = 2 + static_cast<int>(seed % 33);
            spec.seed = seed;
            auto doc = generate(spec).doc;
            auto fast = run_compute(doc, options(Algo::Specialized));
            auto slow = run_compute(doc, options(Algo::Oracle));
            CHECK(fast.output == slow.output);
            for (Emit emit : {Emit::Wiener, Emit::Distances})
                CHECK(run_compute(doc, options(Algo::Specialized, emit)).output ==
                      run_compute(doc, options(Algo::Oracle, emit)).output);
        }
}

TEST_CASE("thread count never changes any output") {
    GenSpec spec;
    spec.cls = GraphClass::Trapezoid;
    spec.n = 120;
    spec.seed = 41;
    auto doc = generate(spec).doc;
    for (Emit emit : {Emit::Wiener, Emit::Distances})
        for (OutputFormat format : {OutputFormat::Plain, OutputFormat::Json}) {
            auto seq = run_compute(doc, options(Algo::Specialized, emit, format, 1));
            auto par = run_compute(doc, options(Algo::Specialized, emit, format, 4));
            CHECK(seq.output == par.output);
            CHECK(seq.stats.total_visits == par.stats.total_visits);
            CHECK(seq.stats.max_visits_per_source == par.stats.max_visits_per_source);
        }
}

TEST_CASE("bench sweeps doubling sizes and cross-checks the oracle") {
    BenchSpec spec;
    spec.cls = GraphClass::Interval;
    spec.n_start = 16;
    spec.n_end = 64;
    spec.seed = 3;
    spec.oracle_cutoff = 32;
    std::ostringstream csv;
    auto rows = run_bench(spec, &csv);

    REQUIRE(rows.size() == 6); // 16, 32, 64; one specialized + one oracle row each
    CHECK(rows[0].n == 16);
    CHECK(rows[2].n == 32);
    CHECK(rows[4].n == 64);
    for (std::size_t i = 0; i < rows.size(); i += 2) {
        CHECK(rows[i].algo == Algo::Specialized);
        CHECK(rows[i + 1].algo == Algo::Oracle);
        CHECK(rows[i].ran);
    }
    CHECK(rows[1].ran);
    CHECK(rows[3].ran);
    CHECK(rows[1].wiener == rows[0].wiener);
    CHECK_FALSE(rows[5].ran); // 64 > cutoff: oracle skipped

    const std::string text = csv.str();
    CHECK(text.substr(0, csv_header().size()) == csv_header());
    CHECK(text.find("interval,64,oracle,skipped,,,\n") != std::string::npos);

    CHECK_THROWS_AS(run_bench(BenchSpec{GraphClass::Interval, 0, 8, 1, 2048, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_bench(BenchSpec{GraphClass::Interval, 16, 8, 1, 2048, 1}),
                    std::invalid_argument);
}

TEST_CASE("csv lines match the documented shape") {
    CHECK(csv_header() == "class,n,algo,wiener,vertex_visits,layers,wall_ms\n");

    BenchRow fast;
    fast.cls = GraphClass::Permutation;
    fast.n = 8;
    fast.algo = Algo::Specialized;
    fast.wiener = WienerValue{42};
    fast.stats.max_visits_per_source = 17;
    fast.stats.max_layers = 3;
    fast.wall_ms = 1.5;
    CHECK(csv_line(fast) == "permutation,8,specialized,42,17,3,1.500\n");

    BenchRow slow = fast;
    slow.algo = Algo::Oracle;
    slow.stats = {};
    slow.wall_ms = 2.25;
    CHECK(csv_line(slow) == "permutation,8,oracle,42,,,2.250\n");

    BenchRow skipped = slow;
    skipped.ran = false;
    CHECK(csv_line(skipped) == "permutation,8,oracle,skipped,,,\n");
}

TEST_CASE("explicit_of covers every class") {
    CHECK(explicit_of(parse_document(kChainDoc)).edge_count() == 4);
    CHECK(explicit_of(parse_document(kRingDoc)).edge_count() == 4);
    CHECK(explicit_of(parse_document("wig 1 permutation\n3\n3 1 2\n")).edge_count() == 2);
    CHECK(explicit_of(parse_document("wig 1 trapezoid\n1\n1 2 1 2\n")).edge_count() == 0);
    auto g = explicit_of(parse_document("wig 1 cactus\n2 1\n1 2 7\n"));
    CHECK(g.weighted);
    CHECK(g.neighbors(1).at(0).weight == 7);
}

TEST_SUITE_END();
