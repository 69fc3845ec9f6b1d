#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wig/document.hpp"

namespace wig {

enum class Algo { Specialized, Oracle };
enum class Emit { Wiener, Distances };
enum class OutputFormat { Plain, Json };

const char* algo_name(Algo a); // "specialized" | "oracle"

struct ComputeOptions {
    Algo algo = Algo::Specialized;
    Emit emit = Emit::Wiener;
    OutputFormat format = OutputFormat::Plain;
    int threads = 1;
};

// One computation over one document. `output` is the exact text the CLI
// prints (deterministic: no timings inside). Work counters are filled for
// specialized runs; oracle runs report none.
struct RunReport {
    GraphClass cls = GraphClass::Interval;
    int n = 0;
    Algo algo = Algo::Specialized;
    std::optional<WienerValue> wiener;
    WorkStats stats;
    double wall_ms = 0.0;
    std::string output;
};

RunReport run_compute(const InputDocument& doc, const ComputeOptions& opt);

// Specialized Wiener value for any document class.
WienerValue specialized_wiener(const InputDocument& doc, int threads = 1,
                               WorkStats* stats = nullptr);

// Explicit graph with the same adjacency, for oracle runs and tests.
ExplicitGraph explicit_of(const InputDocument& doc);

// Doubling sweep n_start, 2*n_start, ... <= n_end over generated instances.
// The oracle is run (and cross-checked against the specialized value) up to
// `oracle_cutoff`, then reported as skipped.
struct BenchSpec {
    GraphClass cls = GraphClass::Interval;
    int n_start = 64;
    int n_end = 1024;
    std::uint64_t seed = 1;
    int oracle_cutoff = 2048;
    int threads = 1;
};

struct BenchRow {
    GraphClass cls = GraphClass::Interval;
    int n = 0;
    Algo algo = Algo::Specialized;
    bool ran = true;
    WienerValue wiener;
    WorkStats stats;
    double wall_ms = 0.0;
};

std::vector<BenchRow> run_bench(const BenchSpec& spec, std::ostream* csv = nullptr);

std::string csv_header();
std::string csv_line(const BenchRow& row);

} // namespace wig
