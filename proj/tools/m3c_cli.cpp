// Command-line front end: synthetic data generation, solver runs, evaluation and traces.

#include "m3c/dataset.hpp"
#include "m3c/error.hpp"
#include "m3c/experiment.hpp"
#include "m3c/solver.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitParse = 3;

struct RunOptions {
    std::string input;
    std::string scheme = "fuse";
    std::string ratio = "auto";
    std::size_t clusters = 3;
    int max_iters = 10;
    std::size_t knn = 10;
    double beta = 0.9;
    double sigma_sq = 0.03;
    std::uint64_t seed = 0;
    std::size_t repeats = 1;
    std::string out;
    std::string csv;
    bool with_timing = false;
    bool rebuild_always = false;
};

void add_solver_flags(CLI::App* cmd, RunOptions& o)
{
    cmd->add_option("--input", o.input, "dataset JSON")->required();
    cmd->add_option("--scheme", o.scheme, "hard | global | local | fuse");
    cmd->add_option("--r", o.ratio, "pair ratio in (0, 1], or auto");
    cmd->add_option("--clusters", o.clusters);
    cmd->add_option("--max-iters", o.max_iters);
    cmd->add_option("--knn", o.knn);
    cmd->add_option("--beta", o.beta);
    cmd->add_option("--sigma-sq", o.sigma_sq);
    cmd->add_option("--seed", o.seed, "solver seed; repeat r uses seed + r");
    cmd->add_option("--repeats", o.repeats);
    cmd->add_flag("--with-timing", o.with_timing, "include wall-clock fields in the output");
    cmd->add_flag("--rebuild-always", o.rebuild_always,
                  "adopt every rebuilt indicator, even one that scores the new matchings lower");
}

m3c::SolverConfig solver_config(const RunOptions& o)
{
    m3c::SolverConfig cfg;
    cfg.scheme = m3c::parse_scheme(o.scheme);
    if (o.ratio != "auto") {
        std::size_t used = 0;
        double r = 0.0;
        try {
            r = std::stod(o.ratio, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != o.ratio.size())
            throw m3c::ConfigError("--r must be a number or 'auto', got '" + o.ratio + "'");
        cfg.ratio = r;
    }
    cfg.n_clusters = o.clusters;
    cfg.max_iters = o.max_iters;
    cfg.knn_k = o.knn;
    cfg.beta = o.beta;
    cfg.sigma_sq = o.sigma_sq;
    cfg.seed = o.seed;
    cfg.keep_better_surrogate = !o.rebuild_always;
    cfg.validate();
    if (o.repeats == 0)
        throw m3c::ConfigError("--repeats must be at least 1");
    return cfg;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw m3c::ConfigError("cannot write '" + path + "'");
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw m3c::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_metric(const std::optional<double>& v)
{
    if (!v)
        return "unavailable";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

std::string format_stat(const std::optional<m3c::Statistic>& s)
{
    if (!s)
        return "unavailable";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f +- %.4f", s->mean, s->stddev);
    return buf;
}

void print_summary(std::ostream& os, const m3c::ExperimentSummary& s)
{
    os << "MA " << format_stat(s.ma) << '\n'
       << "CP " << format_stat(s.cp) << '\n'
       << "RI " << format_stat(s.ri) << '\n'
       << "CA " << format_stat(s.ca) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Joint multi-graph matching and clustering"};
    app.require_subcommand(1);

    m3c::SynthConfig synth;
    std::string synth_out;
    std::size_t graphs_per_class = 8;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic dataset");
    synth_cmd->add_option("--classes", synth.n_classes);
    synth_cmd->add_option("--graphs-per-class", graphs_per_class);
    synth_cmd->add_option("--inliers", synth.n_inliers);
    synth_cmd->add_option("--outliers", synth.n_outliers);
    synth_cmd->add_option("--deform", synth.deform_sigma, "std of the coordinate noise");
    synth_cmd->add_option("--seed", synth.seed);
    synth_cmd->add_option("--out", synth_out, "output path (stdout if omitted)");

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "solve a dataset and score it");
    add_solver_flags(run_cmd, run);
    run_cmd->add_option("--out", run.out, "results JSON (stdout if omitted)");
    run_cmd->add_option("--csv", run.csv, "one row per repeat");

    std::string pred_path, gt_path;
    auto* eval_cmd = app.add_subcommand("eval", "score stored results against a dataset");
    eval_cmd->add_option("--pred", pred_path, "results JSON")->required();
    eval_cmd->add_option("--gt", gt_path, "dataset JSON with ground truth")->required();

    RunOptions trace;
    auto* trace_cmd = app.add_subcommand("trace", "per-iteration objective and structure change");
    add_solver_flags(trace_cmd, trace);
    trace_cmd->add_option("--out", trace.out, "CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (synth_cmd->parsed()) {
            synth.graphs_per_class = {graphs_per_class};
            synth.validate();
            write_text(synth_out, m3c::serialize_dataset(m3c::Dataset::from_synth(synth)));
        } else if (run_cmd->parsed()) {
            const auto cfg = solver_config(run);
            const auto data = m3c::load_dataset(run.input);
            const auto results = m3c::run_experiment(data, cfg, run.repeats);
            m3c::ResultsOptions opts;
            opts.include_timing = run.with_timing;
            write_text(run.out, m3c::results_to_json(results, cfg, opts));
            if (!run.csv.empty())
                write_text(run.csv, m3c::results_to_csv(results));
            if (!run.out.empty() && run.out != "-")
                print_summary(std::cout, m3c::summarize(results));
        } else if (eval_cmd->parsed()) {
            const auto gt = m3c::load_dataset(gt_path);
            const auto preds = m3c::parse_results(read_text(pred_path));
            std::vector<m3c::ExperimentResult> scored;
            for (const auto& p : preds) {
                m3c::Dataset instance = gt;
                if (gt.synth && p.repeat > 0) {
                    auto sc = *gt.synth;
                    sc.seed += p.repeat;
                    instance = m3c::Dataset::from_synth(sc);
                }
                if (p.division.size() != instance.graphs.size())
                    throw m3c::ParseError("results cover " + std::to_string(p.division.size()) +
                                          " graphs but the dataset has " +
                                          std::to_string(instance.graphs.size()));
                m3c::ExperimentResult r;
                r.repeat = p.repeat;
                r.metrics = m3c::evaluate(p.matchings, p.division, instance);
                std::cout << "repeat " << p.repeat << ": MA " << format_metric(r.metrics.ma)
                          << " CP " << format_metric(r.metrics.cp) << " RI "
                          << format_metric(r.metrics.ri) << " CA " << format_metric(r.metrics.ca)
                          << '\n';
                scored.push_back(std::move(r));
            }
            print_summary(std::cout, m3c::summarize(scored));
        } else if (trace_cmd->parsed()) {
            const auto cfg = solver_config(trace);
            const auto data = m3c::load_dataset(trace.input);
            const auto results = m3c::run_experiment(data, cfg, trace.repeats);
            write_text(trace.out, m3c::trace_to_csv(results, trace.with_timing));
        }
    } catch (const m3c::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const m3c::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return 0;
}
