#pragma once

#include "m3c/matrix.hpp"
#include "m3c/types.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace m3c {

/// Relaxed indicator construction schemes, plus the strict (clustered) baseline.
enum class Scheme { hard, global, local, fuse };

/// True iff c_ij and c_jk imply c_ik for all triples.
bool check_transitive(const ClusterIndicator& c);

/// Connected components of the selection graph (equal to SCCs for a symmetric indicator).
std::size_t scc_count(const ClusterIndicator& c);

bool is_connected(const ClusterIndicator& c);

/// Unordered pair budget floor(r N^2 / 2), clamped to [1, N(N-1)/2].
std::size_t global_pair_budget(std::size_t n, double r);

/// Per-graph neighbour budget max(1, floor(r N)), clamped to N - 1.
std::size_t local_neighbour_budget(std::size_t n, double r);

/// Top global_pair_budget(N, r) unordered pairs by weight.
ClusterIndicator global_rank_indicator(const Matrix& weights, double r);

/// Each graph marks its local_neighbour_budget(N, r) best neighbours; symmetrised by union.
ClusterIndicator local_rank_indicator(const Matrix& weights, double r);

/// Pairs ranked by R_uv = rank of u among v's neighbours + rank of v among u's neighbours
/// (1-based); the global_pair_budget(N, r) smallest R are selected.
ClusterIndicator fuse_rank_indicator(const Matrix& weights, double r);

/// Unordered pairs (i < j) in the order the given relaxed scheme prefers them. Selecting a
/// prefix of length B reproduces the scheme's indicator at budget B; for the local scheme the
/// key is min(rank of u at v, rank of v at u), which is the union rule at a growing budget.
/// Ties go to the larger weight, then to the lexicographically smaller pair.
std::vector<std::pair<std::size_t, std::size_t>> ranked_pairs(const Matrix& weights,
                                                              Scheme scheme);

/// Adds pairs in scheme order until the selection graph is connected.
ClusterIndicator auto_connect_indicator(const Matrix& weights, Scheme scheme);

ClusterIndicator division_to_indicator(const ClusterDivision& d);

/// Labels are connected components, numbered by smallest member.
ClusterDivision indicator_to_division(const ClusterIndicator& c);

/// Off-diagonal entries that differ, counted over ordered pairs.
std::size_t structure_change(const ClusterIndicator& prev, const ClusterIndicator& next);

} // namespace m3c
