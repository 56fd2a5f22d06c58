#include "m3c/synth.hpp"

#include "m3c/delaunay.hpp"
#include "m3c/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace m3c {

void SynthConfig::validate() const
{
    if (n_classes < 1)
        throw ConfigError("synth: at least one class is required");
    if (graphs_per_class.empty() ||
        (graphs_per_class.size() != 1 && graphs_per_class.size() != n_classes))
        throw ConfigError("synth: graphs_per_class needs one entry or one per class");
    for (auto g : graphs_per_class)
        if (g < 1)
            throw ConfigError("synth: every class needs at least one graph");
    if (n_inliers < 1)
        throw ConfigError("synth: at least one inlier is required");
    if (!(deform_sigma >= 0.0))
        throw ConfigError("synth: deform_sigma must be non-negative");
}

std::size_t SynthConfig::graphs_in_class(std::size_t c) const
{
    return graphs_per_class.size() == 1 ? graphs_per_class.front() : graphs_per_class.at(c);
}

SynthInstance synth_generate(const SynthConfig& cfg)
{
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> noise(0.0, 1.0);

    SynthInstance out;
    std::vector<std::size_t> labels;
    for (std::size_t c = 0; c < cfg.n_classes; ++c) {
        std::vector<Point> prototype(cfg.n_inliers);
        for (auto& p : prototype)
            p = {uniform(rng), uniform(rng)};

        for (std::size_t g = 0; g < cfg.graphs_in_class(c); ++g) {
            std::vector<Point> pts;
            Landmarks marks;
            for (std::size_t k = 0; k < cfg.n_inliers; ++k) {
                Point p = prototype[k];
                if (cfg.deform_sigma > 0.0) {
                    p.x += cfg.deform_sigma * noise(rng);
                    p.y += cfg.deform_sigma * noise(rng);
                }
                pts.push_back(p);
                marks.emplace_back(k);
            }
            for (std::size_t k = 0; k < cfg.n_outliers; ++k) {
                pts.push_back({uniform(rng), uniform(rng)});
                marks.emplace_back(std::nullopt);
            }

            std::vector<std::size_t> perm(pts.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Point> shuffled(pts.size());
            Landmarks shuffled_marks(pts.size());
            for (std::size_t v = 0; v < pts.size(); ++v) {
                shuffled[v] = pts[perm[v]];
                shuffled_marks[v] = marks[perm[v]];
            }

            auto edges = delaunay(shuffled);
            out.graphs.emplace_back("c" + std::to_string(c) + "_g" + std::to_string(g),
                                    std::move(shuffled), std::move(edges),
                                    "class" + std::to_string(c), cfg.n_inliers);
            out.landmarks.push_back(std::move(shuffled_marks));
            labels.push_back(c);
        }
    }
    out.gt_division = ClusterDivision(std::move(labels));
    out.gt_matchings = landmark_matchings(out.graphs, out.landmarks, out.gt_division);
    return out;
}

MatchingSet landmark_matchings(const std::vector<PointGraph>& graphs,
                               const std::vector<Landmarks>& landmarks,
                               const ClusterDivision& division)
{
    if (landmarks.size() != graphs.size() || division.size() != graphs.size())
        throw ContractViolation("landmark_matchings: inputs cover different graph counts");
    std::vector<std::size_t> sizes;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        if (landmarks[g].size() != graphs[g].size())
            throw ContractViolation("landmark_matchings: landmark list length differs from node count");
        sizes.push_back(graphs[g].size());
    }
    MatchingSet out(sizes);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            if (division[i] != division[j])
                continue;
            Assignment x(sizes[i], sizes[j]);
            for (std::size_t a = 0; a < sizes[i]; ++a) {
                if (!landmarks[i][a])
                    continue;
                for (std::size_t c = 0; c < sizes[j]; ++c)
                    if (landmarks[j][c] == landmarks[i][a]) {
                        x.set(a, c);
                        break;
                    }
            }
            out.set(i, j, x);
        }
    return out;
}

} // namespace m3c
