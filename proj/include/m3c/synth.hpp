#pragma once

#include "m3c/graph.hpp"
#include "m3c/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace m3c {

/// Landmark id of every node of one graph: the index of the prototype keypoint it derives
/// from, or empty for an outlier.
using Landmarks = std::vector<std::optional<std::size_t>>;

struct SynthConfig {
    std::size_t n_classes = 3;
    /// One entry per class; a single entry applies to every class.
    std::vector<std::size_t> graphs_per_class{8};
    std::size_t n_inliers = 10;
    std::size_t n_outliers = 2;
    double deform_sigma = 0.03;
    std::uint64_t seed = 0;

    /// Throws ConfigError on an out-of-range field.
    void validate() const;
    std::size_t graphs_in_class(std::size_t c) const;
};

struct SynthInstance {
    std::vector<PointGraph> graphs;
    std::vector<Landmarks> landmarks;
    MatchingSet gt_matchings;
    ClusterDivision gt_division;
};

/// Samples one prototype per class in the unit square; each graph perturbs the prototype with
/// Gaussian noise, appends uniform outliers, shuffles its nodes and is triangulated. Graph ids
/// are "c<class>_g<index>", class labels "class<k>". Deterministic in cfg.seed.
SynthInstance synth_generate(const SynthConfig& cfg);

/// Planted correspondences: nodes of two same-class graphs match iff they carry the same
/// landmark; graphs of different classes get empty assignments.
MatchingSet landmark_matchings(const std::vector<PointGraph>& graphs,
                               const std::vector<Landmarks>& landmarks,
                               const ClusterDivision& division);

} // namespace m3c
