#pragma once

#include "m3c/assignment.hpp"
#include "m3c/matrix.hpp"

#include <cstddef>
#include <vector>

namespace m3c {

/// Pairwise matchings for N graphs. Only i < j is stored; (j, i) is served as the transpose,
/// so the symmetry invariant holds structurally.
class MatchingSet {
public:
    MatchingSet() = default;
    /// Empty assignments of the right shape for every pair.
    explicit MatchingSet(const std::vector<std::size_t>& node_counts);

    std::size_t size() const { return node_counts_.size(); }
    std::size_t node_count(std::size_t graph) const { return node_counts_[graph]; }

    /// Assignment from graph i to graph j, i != j.
    Assignment at(std::size_t i, std::size_t j) const;
    /// Stores x for (i, j) and its transpose for (j, i).
    void set(std::size_t i, std::size_t j, const Assignment& x);

    bool operator==(const MatchingSet&) const = default;

private:
    std::size_t slot(std::size_t i, std::size_t j) const;

    std::vector<std::size_t> node_counts_;
    std::vector<Assignment> upper_;
};

/// Symmetric boolean N x N pair selection with a true diagonal.
class ClusterIndicator {
public:
    ClusterIndicator() = default;
    /// Identity-only indicator (no off-diagonal selection).
    explicit ClusterIndicator(std::size_t n);

    static ClusterIndicator complete(std::size_t n);

    std::size_t size() const { return n_; }
    bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
    /// Sets (i, j) and (j, i). The diagonal is fixed; setting it to false is a contract violation.
    void set(std::size_t i, std::size_t j, bool value = true);

    /// Number of selected off-diagonal unordered pairs.
    std::size_t pair_count() const;

    bool operator==(const ClusterIndicator&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> bits_;
};

/// Cluster label per graph; labels are dense in [0, n_clusters).
class ClusterDivision {
public:
    ClusterDivision() = default;
    /// Throws ContractViolation if some id in [0, max label] is unused.
    explicit ClusterDivision(std::vector<std::size_t> labels);

    /// Relabels by order of first appearance, so equal partitions compare equal.
    ClusterDivision canonical() const;

    const std::vector<std::size_t>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t n_clusters() const { return n_clusters_; }
    std::size_t operator[](std::size_t i) const { return labels_[i]; }

    /// Member lists per cluster id.
    std::vector<std::vector<std::size_t>> members() const;

    bool operator==(const ClusterDivision&) const = default;

private:
    std::vector<std::size_t> labels_;
    std::size_t n_clusters_ = 0;
};

/// Supergraph over the graph set: adjacency is the (relaxed) indicator, weights the pair scores.
struct Supergraph {
    ClusterIndicator adjacency;
    Matrix weights;
};

} // namespace m3c
