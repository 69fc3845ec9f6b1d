#include "wig/compute.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "wig/generate.hpp"
#include "wig/oracle.hpp"

namespace wig {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<DistanceRow> specialized_rows(const InputDocument& doc, WorkStats& stats) {
    const int n = doc.n();
    std::vector<DistanceRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    auto run = [&](auto&& row_fn) {
        for (Vertex s = 1; s <= n; ++s) {
            WorkCounter wc;
            rows.push_back(row_fn(s, wc));
            stats.absorb(wc);
        }
    };
    switch (doc.cls) {
    case GraphClass::Cactus: {
        const auto bct = validate_cactus(std::get<CactusRep>(doc.rep));
        run([&](Vertex s, WorkCounter& wc) { return cactus_sssp(bct, s, &wc); });
        break;
    }
    case GraphClass::Interval: {
        const IntervalIndex idx(std::get<IntervalRep>(doc.rep));
        run([&](Vertex s, WorkCounter& wc) { return idx.sssp(s, &wc); });
        break;
    }
    case GraphClass::CircularArc: {
        const ArcIndex idx(std::get<ArcRep>(doc.rep));
        run([&](Vertex s, WorkCounter& wc) { return idx.sssp(s, &wc); });
        break;
    }
    case GraphClass::Permutation: {
        const PermutationIndex idx(std::get<PermutationRep>(doc.rep));
        run([&](Vertex s, WorkCounter& wc) { return idx.sssp(s, &wc); });
        break;
    }
    case GraphClass::Trapezoid: {
        const TrapezoidIndex idx(std::get<TrapezoidRep>(doc.rep));
        run([&](Vertex s, WorkCounter& wc) { return idx.sssp(s, &wc); });
        break;
    }
    }
    return rows;
}

std::vector<DistanceRow> oracle_rows(const InputDocument& doc) {
    const ExplicitGraph g = explicit_of(doc);
    std::vector<DistanceRow> rows;
    rows.reserve(static_cast<std::size_t>(g.n));
    for (Vertex s = 1; s <= g.n; ++s)
        rows.push_back(g.weighted ? dijkstra_sssp(g, s) : bfs_sssp(g, s));
    return rows;
}

std::string plain_distances(const std::vector<DistanceRow>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.dist.size(); ++i) {
            if (i) out += ' ';
            if (row.dist[i]) out += std::to_string(*row.dist[i]);
            else out += '-';
        }
        out += '\n';
    }
    return out;
}

nlohmann::json json_common(const InputDocument& doc, const ComputeOptions& opt) {
    return {{"class", class_name(doc.cls)}, {"n", doc.n()}, {"algo", algo_name(opt.algo)}};
}

nlohmann::json json_work(const WorkStats& stats) {
    return {{"total_visits", stats.total_visits},
            {"max_visits_per_source", stats.max_visits_per_source},
            {"max_layers", stats.max_layers}};
}

} // namespace

const char* algo_name(Algo a) {
    return a == Algo::Specialized ? "specialized" : "oracle";
}

ExplicitGraph explicit_of(const InputDocument& doc) {
    return std::visit([](const auto& rep) { return build_explicit(rep); }, doc.rep);
}

WienerValue specialized_wiener(const InputDocument& doc, int threads, WorkStats* stats) {
    switch (doc.cls) {
    case GraphClass::Cactus:
        return cactus_wiener(std::get<CactusRep>(doc.rep), threads, stats);
    case GraphClass::Interval:
        return interval_wiener(std::get<IntervalRep>(doc.rep), threads, stats);
    case GraphClass::CircularArc:
        return circ_wiener(std::get<ArcRep>(doc.rep), threads, stats);
    case GraphClass::Permutation:
        return perm_wiener(std::get<PermutationRep>(doc.rep), threads, stats);
    case GraphClass::Trapezoid:
        return trap_wiener(std::get<TrapezoidRep>(doc.rep), threads, stats);
    }
    throw std::logic_error("unhandled graph class");
}

RunReport run_compute(const InputDocument& doc, const ComputeOptions& opt) {
    RunReport report;
    report.cls = doc.cls;
    report.n = doc.n();
    report.algo = opt.algo;
    const auto t0 = Clock::now();

    if (opt.emit == Emit::Wiener) {
        WorkStats stats;
        const WienerValue w = opt.algo == Algo::Specialized
                                  ? specialized_wiener(doc, opt.threads, &stats)
                                  : oracle_wiener(explicit_of(doc));
        report.wiener = w;
        report.stats = stats;
        if (opt.format == OutputFormat::Plain) {
            report.output = std::to_string(w.value) + "\n";
        } else {
            auto j = json_common(doc, opt);
            j["wiener"] = w.value;
            if (opt.algo == Algo::Specialized) j["work"] = json_work(stats);
            report.output = j.dump() + "\n";
        }
    } else {
        WorkStats stats;
        const auto rows = opt.algo == Algo::Specialized ? specialized_rows(doc, stats)
                                                        : oracle_rows(doc);
        report.stats = stats;
        if (opt.format == OutputFormat::Plain) {
            report.output = plain_distances(rows);
        } else {
            auto j = json_common(doc, opt);
            auto matrix = nlohmann::json::array();
            for (const auto& row : rows) {
                auto jrow = nlohmann::json::array();
                for (const auto& d : row.dist) {
                    if (d) jrow.push_back(*d);
                    else jrow.push_back(nullptr);
                }
                matrix.push_back(std::move(jrow));
            }
            j["distances"] = std::move(matrix);
            if (opt.algo == Algo::Specialized) j["work"] = json_work(stats);
            report.output = j.dump() + "\n";
        }
    }
    report.wall_ms = ms_since(t0);
    return report;
}

std::string csv_header() {
    return "class,n,algo,wiener,vertex_visits,layers,wall_ms\n";
}

std::string csv_line(const BenchRow& row) {
    std::string out = class_name(row.cls);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += algo_name(row.algo);
    out += ',';
    if (!row.ran) {
        out += "skipped,,,\n";
        return out;
    }
    out += std::to_string(row.wiener.value);
    out += ',';
    // vertex_visits is the per-source maximum, the figure the 8n budget caps
    if (row.algo == Algo::Specialized) {
        out += std::to_string(row.stats.max_visits_per_source);
        out += ',';
        out += std::to_string(row.stats.max_layers);
    } else {
        out += ',';
    }
    out += ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", row.wall_ms);
    out += buf;
    out += '\n';
    return out;
}

std::vector<BenchRow> run_bench(const BenchSpec& spec, std::ostream* csv) {
    if (spec.n_start < 1 || spec.n_end < spec.n_start)
        throw std::invalid_argument("bench range must satisfy 1 <= n_start <= n_end");
    if (csv) *csv << csv_header();
    std::vector<BenchRow> rows;
    for (std::int64_t n = spec.n_start; n <= spec.n_end; n *= 2) {
        GenSpec gen_spec;
        gen_spec.cls = spec.cls;
        gen_spec.n = static_cast<int>(n);
        gen_spec.seed = spec.seed + static_cast<std::uint64_t>(n);
        const Generated inst = generate(gen_spec);

        BenchRow fast;
        fast.cls = spec.cls;
        fast.n = static_cast<int>(n);
        fast.algo = Algo::Specialized;
        auto t0 = Clock::now();
        fast.wiener = specialized_wiener(inst.doc, spec.threads, &fast.stats);
        fast.wall_ms = ms_since(t0);
        if (csv) *csv << csv_line(fast);
        rows.push_back(fast);

        BenchRow slow;
        slow.cls = spec.cls;
        slow.n = static_cast<int>(n);
        slow.algo = Algo::Oracle;
        if (n <= spec.oracle_cutoff) {
            t0 = Clock::now();
            slow.wiener = oracle_wiener(explicit_of(inst.doc));
            slow.wall_ms = ms_since(t0);
            if (slow.wiener != fast.wiener)
                throw Error("bench cross-check failed: " + std::string(class_name(spec.cls)) +
                            " n=" + std::to_string(n));
        } else {
            slow.ran = false;
        }
        if (csv) *csv << csv_line(slow);
        rows.push_back(slow);
    }
    return rows;
}

} // namespace wig
