#pragma once

#include "m3c/graph.hpp"
#include "m3c/synth.hpp"
#include "m3c/types.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace m3c {

inline constexpr int kDatasetVersion = 1;

/// A graph collection with whatever ground truth the source provides.
///
/// File format (JSON):
///   {"format": "m3c-dataset", "version": 1, "synth": {...}?,
///    "graphs": [{"id": str, "class": str?, "n_inliers": int?, "landmarks": [int|null]?,
///                "points": [[x, y], ...], "edges": [[a, b], ...]?}]}
/// Missing edges are rebuilt by Delaunay triangulation. Missing landmarks default to
/// "the first n_inliers nodes are keypoints 0..n_inliers-1 in order" when n_inliers is set.
struct Dataset {
    std::vector<PointGraph> graphs;
    /// Per graph; empty when the graph carries no keypoint identities.
    std::vector<Landmarks> landmarks;
    /// Generator settings when the dataset is synthetic; lets experiments resample instances.
    std::optional<SynthConfig> synth;

    static Dataset from_synth(const SynthConfig& cfg);

    /// Classes numbered by first appearance; empty unless every graph has a class label.
    std::optional<ClusterDivision> gt_division() const;
    /// Planted correspondences; empty unless classes and landmarks are known for every graph.
    std::optional<MatchingSet> gt_matchings() const;
};

/// Throws ParseError naming the graph and field at fault, VersionError on an unknown version.
Dataset parse_dataset(const std::string& text);
Dataset load_dataset(const std::filesystem::path& path);

std::string serialize_dataset(const Dataset& d);
void save_dataset(const std::filesystem::path& path, const Dataset& d);

} // namespace m3c
