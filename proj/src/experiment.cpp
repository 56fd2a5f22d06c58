#include "m3c/experiment.hpp"

#include "m3c/error.hpp"
#include "m3c/indicator.hpp"
#include "m3c/metrics.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace m3c {

using nlohmann::json;

MetricSet evaluate(const MatchingSet& matchings, const ClusterDivision& division,
                   const Dataset& truth)
{
    MetricSet m;
    const auto gt_division = truth.gt_division();
    if (!gt_division)
        return m;
    if (gt_division->size() != division.size())
        throw ContractViolation("evaluate: prediction and ground truth cover different graphs");
    m.cp = clustering_purity(division, *gt_division);
    m.ri = rand_index(division, *gt_division);
    m.ca = clustering_accuracy(division, *gt_division);
    if (const auto gt = truth.gt_matchings()) {
        const auto acc = matching_accuracy(matchings, *gt, division_to_indicator(*gt_division));
        if (acc.defined)
            m.ma = acc.value;
    }
    return m;
}

std::vector<ExperimentResult> run_experiment(const Dataset& data, const SolverConfig& cfg,
                                             std::size_t repeats)
{
    cfg.validate();
    std::vector<ExperimentResult> out;
    for (std::size_t r = 0; r < repeats; ++r) {
        ExperimentResult res;
        res.repeat = r;
        Dataset instance;
        const Dataset* current = &data;
        if (data.synth && r > 0) {
            SynthConfig sc = *data.synth;
            sc.seed += r;
            instance = Dataset::from_synth(sc);
            current = &instance;
        }
        if (data.synth)
            res.instance_seed = data.synth->seed + r;

        SolverConfig rc = cfg;
        rc.seed = cfg.seed + r;
        res.solver_seed = rc.seed;

        const auto started = std::chrono::steady_clock::now();
        auto solved = m3c_solve(current->graphs, rc);
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        res.metrics = evaluate(solved.matchings, solved.division, *current);
        res.trace = std::move(solved.trace);
        res.division = std::move(solved.division);
        res.matchings = std::move(solved.matchings);
        out.push_back(std::move(res));
    }
    return out;
}

namespace {

std::optional<Statistic> stat_of(const std::vector<ExperimentResult>& results,
                                 std::optional<double> MetricSet::*field)
{
    std::vector<double> values;
    for (const auto& r : results)
        if (const auto v = r.metrics.*field)
            values.push_back(*v);
    if (values.empty())
        return std::nullopt;
    Statistic s;
    s.count = values.size();
    for (double v : values)
        s.mean += v;
    s.mean /= static_cast<double>(s.count);
    for (double v : values)
        s.stddev += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(s.stddev / static_cast<double>(s.count));
    return s;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json stat_json(const std::optional<Statistic>& s)
{
    if (!s)
        return nullptr;
    return {{"mean", s->mean}, {"std", s->stddev}, {"count", s->count}};
}

json config_json(const SolverConfig& cfg)
{
    return {{"scheme", to_string(cfg.scheme)},
            {"r", cfg.ratio ? json(*cfg.ratio) : json("auto")},
            {"max_iters", cfg.max_iters},
            {"clusters", cfg.n_clusters},
            {"knn", cfg.knn_k},
            {"beta", cfg.beta},
            {"sigma_sq", cfg.sigma_sq},
            {"alpha", cfg.alpha},
            {"seed", cfg.seed},
            {"floyd_sweeps", cfg.floyd_sweeps},
            {"keep_better_surrogate", cfg.keep_better_surrogate},
            {"rrwm",
             {{"jump_prob", cfg.rrwm.jump_prob},
              {"inflation", cfg.rrwm.inflation},
              {"sinkhorn_iters", cfg.rrwm.sinkhorn_iters},
              {"tol", cfg.rrwm.tol},
              {"max_iters", cfg.rrwm.max_iters}}}};
}

std::string csv_number(const std::optional<double>& v)
{
    if (!v)
        return "";
    std::ostringstream os;
    os << std::setprecision(17) << *v;
    return os.str();
}

} // namespace

ExperimentSummary summarize(const std::vector<ExperimentResult>& results)
{
    ExperimentSummary s;
    s.ma = stat_of(results, &MetricSet::ma);
    s.cp = stat_of(results, &MetricSet::cp);
    s.ri = stat_of(results, &MetricSet::ri);
    s.ca = stat_of(results, &MetricSet::ca);
    for (const auto& r : results)
        s.seconds.mean += r.seconds;
    if (!results.empty())
        s.seconds.mean /= static_cast<double>(results.size());
    for (const auto& r : results)
        s.seconds.stddev += (r.seconds - s.seconds.mean) * (r.seconds - s.seconds.mean);
    if (!results.empty())
        s.seconds.stddev = std::sqrt(s.seconds.stddev / static_cast<double>(results.size()));
    s.seconds.count = results.size();
    return s;
}

std::string results_to_json(const std::vector<ExperimentResult>& results, const SolverConfig& cfg,
                            const ResultsOptions& opts)
{
    json runs = json::array();
    for (const auto& r : results) {
        json trace = json::array();
        for (const auto& rec : r.trace.records) {
            json jr = {{"iteration", rec.iteration},
                       {"objective", rec.objective},
                       {"structure_change", rec.structure_change ? json(*rec.structure_change)
                                                                 : json(nullptr)},
                       {"improved_pairs", rec.improved_pairs},
                       {"selected_pairs", rec.selected_pairs},
                       {"surrogate_kept", rec.surrogate_kept}};
            if (opts.include_timing)
                jr["seconds"] = rec.seconds;
            trace.push_back(std::move(jr));
        }
        json node_counts = json::array();
        for (std::size_t g = 0; g < r.matchings.size(); ++g)
            node_counts.push_back(r.matchings.node_count(g));
        json matchings = json::array();
        for (std::size_t i = 0; i < r.matchings.size(); ++i)
            for (std::size_t j = i + 1; j < r.matchings.size(); ++j) {
                json pairs = json::array();
                for (const auto& [a, b] : r.matchings.at(i, j).matches())
                    pairs.push_back({a, b});
                matchings.push_back({{"i", i}, {"j", j}, {"pairs", std::move(pairs)}});
            }
        json run = {{"repeat", r.repeat},
                    {"instance_seed", r.instance_seed ? json(*r.instance_seed) : json(nullptr)},
                    {"solver_seed", r.solver_seed},
                    {"metrics",
                     {{"ma", optional_number(r.metrics.ma)},
                      {"cp", optional_number(r.metrics.cp)},
                      {"ri", optional_number(r.metrics.ri)},
                      {"ca", optional_number(r.metrics.ca)}}},
                    {"labels", r.division.labels()},
                    {"node_counts", std::move(node_counts)},
                    {"matchings", std::move(matchings)},
                    {"trace", std::move(trace)}};
        if (opts.include_timing)
            run["seconds"] = r.seconds;
        runs.push_back(std::move(run));
    }

    const auto summary = summarize(results);
    json jsummary = {{"ma", stat_json(summary.ma)},
                     {"cp", stat_json(summary.cp)},
                     {"ri", stat_json(summary.ri)},
                     {"ca", stat_json(summary.ca)}};
    if (opts.include_timing)
        jsummary["seconds"] = stat_json(summary.seconds);

    json root = {{"format", "m3c-results"},
                 {"version", 1},
                 {"config", config_json(cfg)},
                 {"pair_score_normalization", "min(n_i, n_j)"},
                 {"summary", std::move(jsummary)},
                 {"runs", std::move(runs)}};
    return root.dump(1) + "\n";
}

std::string results_to_csv(const std::vector<ExperimentResult>& results)
{
    std::ostringstream os;
    os << "repeat,instance_seed,solver_seed,ma,cp,ri,ca,seconds,iterations\n";
    for (const auto& r : results) {
        os << r.repeat << ',' << (r.instance_seed ? std::to_string(*r.instance_seed) : "") << ','
           << r.solver_seed << ',' << csv_number(r.metrics.ma) << ',' << csv_number(r.metrics.cp)
           << ',' << csv_number(r.metrics.ri) << ',' << csv_number(r.metrics.ca) << ','
           << csv_number(r.seconds) << ',' << (r.trace.records.size() - 1) << '\n';
    }
    return os.str();
}

std::string trace_to_csv(const std::vector<ExperimentResult>& results, bool include_timing)
{
    std::ostringstream os;
    os << "repeat,iteration,objective,structure_change,improved_pairs,selected_pairs,surrogate_kept";
    if (include_timing)
        os << ",seconds";
    os << '\n';
    for (const auto& r : results)
        for (const auto& rec : r.trace.records) {
            os << r.repeat << ',' << rec.iteration << ',' << csv_number(rec.objective) << ','
               << (rec.structure_change ? std::to_string(*rec.structure_change) : "") << ','
               << rec.improved_pairs << ',' << rec.selected_pairs << ','
               << (rec.surrogate_kept ? 1 : 0);
            if (include_timing)
                os << ',' << csv_number(rec.seconds);
            os << '\n';
        }
    return os.str();
}

std::vector<LoadedPrediction> parse_results(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("results are not valid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("version"))
        throw ParseError("results: missing \"version\" field");
    if (root["version"] != 1)
        throw VersionError("results: unsupported version " + root["version"].dump());
    if (!root.contains("runs") || !root["runs"].is_array())
        throw ParseError("results: missing \"runs\" array");

    std::vector<LoadedPrediction> out;
    try {
        for (const auto& run : root["runs"]) {
            LoadedPrediction p;
            p.repeat = run.at("repeat").get<std::size_t>();
            p.division = ClusterDivision(run.at("labels").get<std::vector<std::size_t>>());
            p.matchings = MatchingSet(run.at("node_counts").get<std::vector<std::size_t>>());
            for (const auto& m : run.at("matchings")) {
                const auto i = m.at("i").get<std::size_t>();
                const auto j = m.at("j").get<std::size_t>();
                std::vector<Assignment::Match> pairs;
                for (const auto& pr : m.at("pairs"))
                    pairs.emplace_back(pr.at(0).get<std::size_t>(), pr.at(1).get<std::size_t>());
                p.matchings.set(i, j,
                                Assignment(p.matchings.node_count(i), p.matchings.node_count(j),
                                           pairs));
            }
            out.push_back(std::move(p));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("results: malformed run entry: ") + e.what());
    } catch (const ContractViolation& e) {
        throw ParseError(std::string("results: inconsistent run entry: ") + e.what());
    }
    return out;
}

} // namespace m3c
