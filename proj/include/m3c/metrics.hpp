#pragma once

#include "m3c/types.hpp"


namespace m3c {

struct MatchingAccuracy {
    double value = 0.0;
    /// False when no ordered intra-cluster pair with ground-truth matches exists; value is 0 then.
    bool defined = false;
};

/// Mean over ordered intra-cluster pairs (i != j, c_gt(i, j)) of the fraction of ground-truth
/// matches of (i, j) that `pred` reproduces. Only rows matched in `truth` are scored, so
/// outlier assignments never count. Pairs whose ground truth is empty are skipped.
MatchingAccuracy matching_accuracy(const MatchingSet& pred, const MatchingSet& truth,
                                   const ClusterIndicator& same_cluster);

/// (1/N) sum over predicted clusters of the largest overlap with a true cluster.
double clustering_purity(const ClusterDivision& pred, const ClusterDivision& truth);

/// Agreeing ordered pairs over N^2, diagonal included.
double rand_index(const ClusterDivision& pred, const ClusterDivision& truth);

/// 1 - (split + merge) / N_c, both penalties summed over ordered cluster pairs:
///   split = sum_a sum_{p != q} |P_p & C_a| |P_q & C_a| / |C_a|^2
///   merge = sum_p sum_{a != b} |P_p & C_a| |P_p & C_b| / (|C_a| |C_b|)
/// with C the true clusters, P the predicted ones and N_c the true cluster count.
double clustering_accuracy(const ClusterDivision& pred, const ClusterDivision& truth);

} // namespace m3c
