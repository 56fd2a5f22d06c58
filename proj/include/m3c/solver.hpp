#pragma once

#include "m3c/affinity.hpp"
#include "m3c/clustering.hpp"
#include "m3c/graph.hpp"
#include "m3c/indicator.hpp"
#include "m3c/matrix.hpp"
#include "m3c/pairwise.hpp"
#include "m3c/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace m3c {

struct SolverConfig {
    Scheme scheme = Scheme::fuse;
    /// Fixed pair ratio r in (0, 1]; empty means "add ranked pairs until the supergraph connects".
    std::optional<double> ratio;
    int max_iters = 10;
    std::size_t n_clusters = 3;
    std::size_t knn_k = 10;
    double beta = 0.9;
    double sigma_sq = 0.03;
    /// Weight of the geometric affinity when fused with an externally supplied one.
    double alpha = 1.0;
    std::uint64_t seed = 0;
    int floyd_sweeps = 2;
    /// Adopt a newly constructed surrogate only if it scores at least as high as the current one
    /// on the new matchings; otherwise keep the current one. This makes the recorded objective
    /// F(X, C) non-decreasing for every scheme. Off reproduces the plain rebuild each iteration.
    bool keep_better_surrogate = true;
    RrwmParams rrwm;

    /// Throws ConfigError naming the offending field.
    void validate() const;
    SpectralParams spectral() const;
};

std::string to_string(Scheme scheme);
/// Throws ConfigError for an unknown name.
Scheme parse_scheme(const std::string& name);

/// Lawler affinities for every unordered graph pair, stored for i < j.
class AffinitySet {
public:
    AffinitySet() = default;
    AffinitySet(std::size_t n_graphs, std::vector<AffinityMatrix> upper);

    /// Geometric affinity for all pairs of `graphs`.
    static AffinitySet raw(const std::vector<PointGraph>& graphs, double beta, double sigma_sq);

    std::size_t size() const { return n_; }
    /// Affinity with graph min(i, j) on the rows.
    const AffinityMatrix& upper(std::size_t i, std::size_t j) const;
    /// Normalised pair score J_ij of an assignment from graph i to graph j.
    double pair_score(std::size_t i, std::size_t j, const Assignment& x) const;

private:
    std::size_t n_ = 0;
    std::vector<AffinityMatrix> upper_;
};

/// N x N matrix of pair scores J_ij for the current matchings (zero diagonal).
Matrix score_matrix(const MatchingSet& x, const AffinitySet& ks);

/// sum_{i != j} c_ij J_ij / sum_{i != j} c_ij; zero when nothing off-diagonal is selected.
double joint_objective(const MatchingSet& x, const ClusterIndicator& c, const AffinitySet& ks);
double joint_objective(const Matrix& scores, const ClusterIndicator& c);

/// Two-graph solution for every unordered pair; mirror entries are the transposes.
MatchingSet initialize_matchings(const std::vector<PointGraph>& graphs, const AffinitySet& ks,
                                 const RrwmParams& params = {});

/// Relaxed (or, for the hard scheme, clustered) indicator for the given pair scores.
ClusterIndicator construct_surrogate(const Matrix& scores, const SolverConfig& cfg);
ClusterIndicator construct_surrogate(const MatchingSet& x, const AffinitySet& ks,
                                     const SolverConfig& cfg);

struct CompositionResult {
    MatchingSet matchings;
    std::size_t improved_pairs = 0; ///< unordered pairs whose assignment was replaced
};

/// Floyd-style search over composition paths of the supergraph with adjacency `c`.
/// Reachability starts at `c`; for every sweep and every intermediate graph k, each pair
/// (i, j) with i ~ k and k ~ j adopts x_ik o x_kj if that raises J_ij by more than 1e-9, and
/// then becomes reachable itself. Pair scores never decrease.
CompositionResult maximize_composition(const MatchingSet& x, const ClusterIndicator& c,
                                       const AffinitySet& ks, int sweeps);

struct IterationRecord {
    int iteration = 0;                           ///< 0 is the initial matching
    double objective = 0.0;                      ///< F(X, C) for this iteration's result
    bool surrogate_kept = false;                 ///< the rebuilt surrogate scored lower and was dropped
    std::optional<std::size_t> structure_change; ///< from the previous surrogate (t >= 2)
    std::size_t improved_pairs = 0;
    std::size_t selected_pairs = 0;              ///< unordered pairs in this iteration's surrogate
    double seconds = 0.0;
};

struct RunTrace {
    std::vector<IterationRecord> records;
};

struct SolveResult {
    MatchingSet matchings;
    ClusterDivision division;
    RunTrace trace;
    Matrix scores;                      ///< final pair scores J
    std::vector<ClusterIndicator> surrogates; ///< surrogate used at iterations 1..T
};

/// Full pipeline on geometric affinities.
SolveResult m3c_solve(const std::vector<PointGraph>& graphs, const SolverConfig& cfg);

/// Full pipeline on caller-supplied affinities (for example learned ones fused with the
/// geometric affinity through fuse_affinity).
SolveResult m3c_solve(const std::vector<PointGraph>& graphs, const AffinitySet& ks,
                      const SolverConfig& cfg);

/// KNN sparsification and spectral clustering of pair scores into cfg.n_clusters clusters.
ClusterDivision cluster_scores(const Matrix& scores, const SolverConfig& cfg);

} // namespace m3c
