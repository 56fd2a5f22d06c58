#include "m3c/solver.hpp"

#include "m3c/error.hpp"

#include <chrono>

namespace m3c {

namespace {

constexpr double kImprovementThreshold = 1e-9;

std::size_t upper_slot(std::size_t n, std::size_t i, std::size_t j)
{
    if (i > j)
        std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

} // namespace

void SolverConfig::validate() const
{
    if (ratio && !(*ratio > 0.0 && *ratio <= 1.0))
        throw ConfigError("r must lie in (0, 1]");
    if (max_iters < 1)
        throw ConfigError("max_iters must be at least 1");
    if (n_clusters < 1)
        throw ConfigError("n_clusters must be at least 1");
    if (knn_k < 1)
        throw ConfigError("knn_k must be at least 1");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw ConfigError("beta must lie in [0, 1]");
    if (!(sigma_sq > 0.0))
        throw ConfigError("sigma_sq must be positive");
    if (!(alpha >= 0.0))
        throw ConfigError("alpha must be non-negative");
    if (floyd_sweeps < 1)
        throw ConfigError("floyd_sweeps must be at least 1");
    rrwm.validate();
}

SpectralParams SolverConfig::spectral() const
{
    SpectralParams p;
    p.seed = seed;
    return p;
}

std::string to_string(Scheme scheme)
{
    switch (scheme) {
    case Scheme::hard: return "hard";
    case Scheme::global: return "global";
    case Scheme::local: return "local";
    case Scheme::fuse: return "fuse";
    }
    return "unknown";
}

Scheme parse_scheme(const std::string& name)
{
    if (name == "hard")
        return Scheme::hard;
    if (name == "global")
        return Scheme::global;
    if (name == "local")
        return Scheme::local;
    if (name == "fuse")
        return Scheme::fuse;
    throw ConfigError("unknown scheme '" + name + "' (expected hard, global, local or fuse)");
}

AffinitySet::AffinitySet(std::size_t n_graphs, std::vector<AffinityMatrix> upper)
    : n_(n_graphs), upper_(std::move(upper))
{
    if (upper_.size() != n_ * (n_ - (n_ > 0)) / 2)
        throw ContractViolation("affinity set: expected one affinity per unordered pair");
}

AffinitySet AffinitySet::raw(const std::vector<PointGraph>& graphs, double beta, double sigma_sq)
{
    std::vector<AffinityMatrix> upper;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            upper.push_back(build_raw_affinity(graphs[i], graphs[j], beta, sigma_sq));
    return AffinitySet(graphs.size(), std::move(upper));
}

const AffinityMatrix& AffinitySet::upper(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_ || i == j)
        throw ContractViolation("affinity set: invalid pair index");
    return upper_[upper_slot(n_, i, j)];
}

double AffinitySet::pair_score(std::size_t i, std::size_t j, const Assignment& x) const
{
    const auto& k = upper(i, j);
    return i < j ? m3c::pair_score(x, k) : m3c::pair_score(transpose(x), k);
}

Matrix score_matrix(const MatchingSet& x, const AffinitySet& ks)
{
    const std::size_t n = x.size();
    if (ks.size() != n)
        throw ContractViolation("score_matrix: matchings and affinities cover different graphs");
    Matrix j(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            j(a, b) = j(b, a) = ks.pair_score(a, b, x.at(a, b));
    return j;
}

double joint_objective(const Matrix& scores, const ClusterIndicator& c)
{
    if (scores.rows() != c.size() || scores.cols() != c.size())
        throw ContractViolation("joint_objective: score matrix and indicator differ in size");
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (i != j && c(i, j)) {
                sum += scores(i, j);
                ++count;
            }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double joint_objective(const MatchingSet& x, const ClusterIndicator& c, const AffinitySet& ks)
{
    return joint_objective(score_matrix(x, ks), c);
}

MatchingSet initialize_matchings(const std::vector<PointGraph>& graphs, const AffinitySet& ks,
                                 const RrwmParams& params)
{
    if (graphs.size() < 2)
        throw ConfigError("at least two graphs are required");
    std::vector<std::size_t> sizes;
    for (const auto& g : graphs)
        sizes.push_back(g.size());
    MatchingSet x(sizes);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            x.set(i, j, solve_pairwise(graphs[i], graphs[j], ks.upper(i, j), params));
    return x;
}

ClusterDivision cluster_scores(const Matrix& scores, const SolverConfig& cfg)
{
    return spectral_cluster(knn_sparsify(scores, cfg.knn_k), cfg.n_clusters, cfg.spectral());
}

ClusterIndicator construct_surrogate(const Matrix& scores, const SolverConfig& cfg)
{
    if (cfg.scheme == Scheme::hard)
        return division_to_indicator(cluster_scores(scores, cfg));
    if (!cfg.ratio)
        return auto_connect_indicator(scores, cfg.scheme);
    switch (cfg.scheme) {
    case Scheme::global: return global_rank_indicator(scores, *cfg.ratio);
    case Scheme::local: return local_rank_indicator(scores, *cfg.ratio);
    default: return fuse_rank_indicator(scores, *cfg.ratio);
    }
}

ClusterIndicator construct_surrogate(const MatchingSet& x, const AffinitySet& ks,
                                     const SolverConfig& cfg)
{
    return construct_surrogate(score_matrix(x, ks), cfg);
}

CompositionResult maximize_composition(const MatchingSet& x, const ClusterIndicator& c,
                                       const AffinitySet& ks, int sweeps)
{
    const std::size_t n = x.size();
    if (c.size() != n || ks.size() != n)
        throw ContractViolation("maximize_composition: inputs cover different graph counts");

    // Both orientations are kept so compositions need no transposition in the inner loop.
    std::vector<Assignment> cur(n * n);
    Matrix score(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            cur[i * n + j] = x.at(i, j);
            cur[j * n + i] = transpose(cur[i * n + j]);
            score(i, j) = score(j, i) = ks.pair_score(i, j, cur[i * n + j]);
        }
    std::vector<bool> reach(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            reach[i * n + j] = i != j && c(i, j);

    std::vector<bool> improved(n * n, false);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k || !reach[i * n + k])
                    continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (j == k || !reach[k * n + j])
                        continue;
                    Assignment candidate = compose(cur[i * n + k], cur[k * n + j]);
                    const double s = ks.pair_score(i, j, candidate);
                    if (s > score(i, j) + kImprovementThreshold) {
                        cur[j * n + i] = transpose(candidate);
                        cur[i * n + j] = std::move(candidate);
                        score(i, j) = score(j, i) = s;
                        reach[i * n + j] = reach[j * n + i] = true;
                        improved[i * n + j] = true;
                    }
                }
            }
        }
    }

    CompositionResult out{x, 0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (improved[i * n + j]) {
                out.matchings.set(i, j, cur[i * n + j]);
                ++out.improved_pairs;
            }
    return out;
}

SolveResult m3c_solve(const std::vector<PointGraph>& graphs, const SolverConfig& cfg)
{
    cfg.validate();
    if (graphs.size() < 2)
        throw ConfigError("at least two graphs are required");
    if (graphs.size() < cfg.n_clusters)
        throw ConfigError("fewer graphs than requested clusters");
    return m3c_solve(graphs, AffinitySet::raw(graphs, cfg.beta, cfg.sigma_sq), cfg);
}

SolveResult m3c_solve(const std::vector<PointGraph>& graphs, const AffinitySet& ks,
                      const SolverConfig& cfg)
{
    using Clock = std::chrono::steady_clock;
    cfg.validate();
    if (graphs.size() < 2)
        throw ConfigError("at least two graphs are required");
    if (graphs.size() < cfg.n_clusters)
        throw ConfigError("fewer graphs than requested clusters");
    if (ks.size() != graphs.size())
        throw ContractViolation("m3c_solve: affinity set does not match the graph set");

    auto started = Clock::now();
    const auto elapsed = [&] {
        const auto now = Clock::now();
        const double s = std::chrono::duration<double>(now - started).count();
        started = now;
        return s;
    };

    SolveResult result;
    result.matchings = initialize_matchings(graphs, ks, cfg.rrwm);
    result.scores = score_matrix(result.matchings, ks);
    ClusterIndicator next = construct_surrogate(result.scores, cfg);
    IterationRecord first;
    first.objective = joint_objective(result.scores, next);
    first.selected_pairs = next.pair_count();
    first.seconds = elapsed();
    result.trace.records.push_back(first);

    for (int t = 1; t <= cfg.max_iters; ++t) {
        const ClusterIndicator surrogate = next;
        auto step = maximize_composition(result.matchings, surrogate, ks, cfg.floyd_sweeps);
        result.matchings = std::move(step.matchings);
        result.scores = score_matrix(result.matchings, ks);
        next = construct_surrogate(result.scores, cfg);

        IterationRecord rec;
        rec.iteration = t;
        rec.objective = joint_objective(result.scores, next);
        if (cfg.keep_better_surrogate) {
            const double current = joint_objective(result.scores, surrogate);
            if (rec.objective < current) {
                next = surrogate;
                rec.objective = current;
                rec.surrogate_kept = true;
            }
        }
        if (!result.surrogates.empty())
            rec.structure_change = structure_change(result.surrogates.back(), surrogate);
        rec.improved_pairs = step.improved_pairs;
        rec.selected_pairs = surrogate.pair_count();
        rec.seconds = elapsed();
        result.trace.records.push_back(rec);
        result.surrogates.push_back(surrogate);

        if (rec.structure_change == 0u && step.improved_pairs == 0)
            break;
    }

    result.division = cluster_scores(result.scores, cfg);
    return result;
}

} // namespace m3c
