#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "wig/compute.hpp"
#include "wig/generate.hpp"

namespace {

int pick_threads(bool parallel, int threads) {
    if (threads > 0) return threads;
    if (!parallel) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int cmd_compute(const std::string& input, wig::ComputeOptions opt) {
    const wig::InputDocument doc = wig::load_document(input);
    const wig::RunReport report = wig::run_compute(doc, opt);
    std::fputs(report.output.c_str(), stdout);
    return 0;
}

int cmd_validate(const std::string& input) {
    const wig::InputDocument doc = wig::load_document(input);
    if (doc.cls == wig::GraphClass::Cactus)
        wig::validate_cactus(std::get<wig::CactusRep>(doc.rep));
    std::printf("valid %s n=%d\n", wig::class_name(doc.cls), doc.n());
    return 0;
}

int cmd_gen(const wig::GenSpec& spec, const std::string& out_path) {
    const wig::Generated out = wig::generate(spec);
    wig::save_document(out.doc, out_path);
    if (out.augmented) std::fprintf(stderr, "note: connectivity repair applied\n");
    return 0;
}

int cmd_bench(const wig::BenchSpec& spec, const std::string& csv_path) {
    if (csv_path.empty()) {
        wig::run_bench(spec, &std::cout);
        return 0;
    }
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw wig::Error("cannot open output file '" + csv_path + "'");
    wig::run_bench(spec, &csv);
    return 0;
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path) {
    const wig::InputDocument doc = wig::load_document(input);
    wig::InputDocument out;
    if (to == "trapezoid") {
        out.cls = wig::GraphClass::Trapezoid;
        if (doc.cls == wig::GraphClass::Interval)
            out.rep = wig::trap_from_interval(std::get<wig::IntervalRep>(doc.rep));
        else if (doc.cls == wig::GraphClass::Permutation)
            out.rep = wig::trap_from_permutation(std::get<wig::PermutationRep>(doc.rep));
        else
            throw std::invalid_argument(std::string("no trapezoid embedding for class '") +
                                        wig::class_name(doc.cls) + "'");
    } else { // circular-arc
        out.cls = wig::GraphClass::CircularArc;
        if (doc.cls == wig::GraphClass::Interval)
            out.rep = wig::arc_from_interval(std::get<wig::IntervalRep>(doc.rep));
        else
            throw std::invalid_argument(std::string("no circular-arc embedding for class '") +
                                        wig::class_name(doc.cls) + "'");
    }
    wig::save_document(out, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wiener index toolkit for structured graph families"};
    app.require_subcommand(1);

    const std::map<std::string, wig::GraphClass> class_map{
        {"cactus", wig::GraphClass::Cactus},
        {"interval", wig::GraphClass::Interval},
        {"circular-arc", wig::GraphClass::CircularArc},
        {"permutation", wig::GraphClass::Permutation},
        {"trapezoid", wig::GraphClass::Trapezoid}};
    const std::map<std::string, wig::Algo> algo_map{{"specialized", wig::Algo::Specialized},
                                                    {"oracle", wig::Algo::Oracle}};
    const std::map<std::string, wig::Emit> emit_map{{"wiener", wig::Emit::Wiener},
                                                    {"distances", wig::Emit::Distances}};
    const std::map<std::string, wig::OutputFormat> format_map{
        {"plain", wig::OutputFormat::Plain}, {"json", wig::OutputFormat::Json}};

    // compute
    auto* compute = app.add_subcommand("compute", "Compute the Wiener index or all distances");
    std::string in_path;
    wig::ComputeOptions copt;
    bool parallel = false;
    int threads = 0;
    compute->add_option("--input", in_path, "input document")->required();
    compute->add_option("--algo", copt.algo, "algorithm")
        ->transform(CLI::CheckedTransformer(algo_map));
    compute->add_option("--emit", copt.emit, "what to print")
        ->transform(CLI::CheckedTransformer(emit_map));
    compute->add_option("--format", copt.format, "output format")
        ->transform(CLI::CheckedTransformer(format_map));
    compute->add_flag("--parallel", parallel, "use all hardware threads");
    compute->add_option("--threads", threads, "explicit thread count");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a reproducible random instance");
    wig::GenSpec gspec;
    std::string gen_out;
    bool allow_disconnected = false;
    gen->add_option("--class", gspec.cls, "graph class")
        ->transform(CLI::CheckedTransformer(class_map))
        ->required();
    gen->add_option("--n", gspec.n, "vertex count")->required();
    gen->add_option("--seed", gspec.seed, "RNG seed");
    gen->add_option("--span", gspec.coord_span, "coordinate span / circumference");
    gen->add_option("--wrap-prob", gspec.wrap_prob, "circular-arc wrap probability");
    gen->add_option("--edge-prob", gspec.edge_block_prob, "cactus bridge probability");
    gen->add_option("--max-weight", gspec.max_weight, "cactus maximum edge weight");
    gen->add_flag("--allow-disconnected", allow_disconnected,
                  "skip the connectivity requirement");
    gen->add_option("--out", gen_out, "output document path")->required();

    // validate
    auto* validate = app.add_subcommand("validate", "Parse and validate a document");
    std::string val_path;
    validate->add_option("--input", val_path, "input document")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Doubling-size benchmark sweep (CSV)");
    wig::BenchSpec bspec;
    std::string csv_path;
    bool bench_parallel = false;
    int bench_threads = 0;
    bench->add_option("--class", bspec.cls, "graph class")
        ->transform(CLI::CheckedTransformer(class_map))
        ->required();
    bench->add_option("--n-start", bspec.n_start, "first size")->required();
    bench->add_option("--n-end", bspec.n_end, "last size (inclusive bound)")->required();
    bench->add_option("--seed", bspec.seed, "RNG seed");
    bench->add_option("--oracle-cutoff", bspec.oracle_cutoff, "largest n to cross-check");
    bench->add_option("--csv", csv_path, "write CSV here instead of stdout");
    bench->add_flag("--parallel", bench_parallel, "use all hardware threads");
    bench->add_option("--threads", bench_threads, "explicit thread count");

    // convert
    auto* convert = app.add_subcommand("convert", "Re-embed a document in another class");
    std::string conv_in, conv_to, conv_out;
    convert->add_option("--input", conv_in, "input document")->required();
    convert->add_option("--to", conv_to, "target class")
        ->check(CLI::IsMember({"trapezoid", "circular-arc"}))
        ->required();
    convert->add_option("--out", conv_out, "output document path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(compute)) {
            copt.threads = pick_threads(parallel, threads);
            return cmd_compute(in_path, copt);
        }
        if (app.got_subcommand(gen)) {
            gspec.require_connected = !allow_disconnected;
            return cmd_gen(gspec, gen_out);
        }
        if (app.got_subcommand(validate)) return cmd_validate(val_path);
        if (app.got_subcommand(bench)) {
            bspec.threads = pick_threads(bench_parallel, bench_threads);
            return cmd_bench(bspec, csv_path);
        }
        if (app.got_subcommand(convert)) return cmd_convert(conv_in, conv_to, conv_out);
        return 2;
    } catch (const wig::OverflowError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const wig::DisconnectedGraphError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const wig::NotConnectedError& e) {
        std::fprintf(stderr, "error: disconnected: %s\n", e.what());
        return 3;
    } catch (const wig::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
