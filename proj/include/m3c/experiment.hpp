#pragma once

#include "m3c/dataset.hpp"
#include "m3c/solver.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace m3c {

/// Metrics of one run; each is empty when the needed ground truth is unavailable.
struct MetricSet {
    std::optional<double> ma;
    std::optional<double> cp;
    std::optional<double> ri;
    std::optional<double> ca;
};

/// Scores a prediction against whatever ground truth `truth` carries.
MetricSet evaluate(const MatchingSet& matchings, const ClusterDivision& division,
                   const Dataset& truth);

struct ExperimentResult {
    std::size_t repeat = 0;
    std::optional<std::uint64_t> instance_seed; ///< synthetic instance seed, when resampled
    std::uint64_t solver_seed = 0;
    MetricSet metrics;
    double seconds = 0.0;
    RunTrace trace;
    ClusterDivision division;
    MatchingSet matchings;
};

struct Statistic {
    double mean = 0.0;
    double stddev = 0.0; ///< population standard deviation
    std::size_t count = 0;
};

struct ExperimentSummary {
    std::optional<Statistic> ma, cp, ri, ca;
    Statistic seconds;
};

/// Runs the solver `repeats` times. Synthetic datasets are regenerated per repeat with seed
/// synth.seed + r (repeat 0 is the stored instance); other datasets are reused as they are.
/// The solver seed is cfg.seed + r.
std::vector<ExperimentResult> run_experiment(const Dataset& data, const SolverConfig& cfg,
                                             std::size_t repeats);

ExperimentSummary summarize(const std::vector<ExperimentResult>& results);

struct ResultsOptions {
    /// Wall-clock fields vary between runs; leaving them out keeps the JSON byte-reproducible.
    bool include_timing = false;
};

std::string results_to_json(const std::vector<ExperimentResult>& results, const SolverConfig& cfg,
                            const ResultsOptions& opts = {});
/// One row per repeat: repeat,instance_seed,solver_seed,ma,cp,ri,ca,seconds,iterations.
std::string results_to_csv(const std::vector<ExperimentResult>& results);
/// One row per iteration record: repeat,iteration,objective,structure_change,improved_pairs,
/// selected_pairs[,seconds].
std::string trace_to_csv(const std::vector<ExperimentResult>& results, bool include_timing);

struct LoadedPrediction {
    std::size_t repeat = 0;
    ClusterDivision division;
    MatchingSet matchings;
};

/// Reads the labels and matchings of every repeat from a results JSON document.
std::vector<LoadedPrediction> parse_results(const std::string& text);

} // namespace m3c
