#pragma once

#include "m3c/assignment.hpp"
#include "m3c/graph.hpp"
#include "m3c/matrix.hpp"

#include <cstddef>
#include <vector>

namespace m3c {

struct EdgeFeature {
    double length = 0.0;
    double angle = 0.0; ///< radians, within (-pi/2, pi/2]
};

/// Offset added to the x-difference in the edge angle so vertical edges stay finite.
inline constexpr double kAngleEpsilon = 1e-9;

/// One feature per edge of `g`, in `g.edges()` order.
std::vector<EdgeFeature> extract_edge_features(const PointGraph& g);

/// Factored Lawler affinity between graph i (rows) and graph j (cols).
///
/// The full matrix K is never formed. Its diagonal entry for candidate match (a, c) is
/// node(a, c); the off-diagonal entry for the match pair ((a, c), (b, d)) is
/// edge(e_ab, e_cd) whenever ab is an edge of i and cd is an edge of j, in either
/// orientation, and zero otherwise. K is therefore symmetric.
class AffinityMatrix {
public:
    AffinityMatrix() = default;
    /// Throws ContractViolation on shape mismatches, bad endpoints or entries outside [0, 1].
    AffinityMatrix(Matrix node, std::vector<Edge> edges_i, std::vector<Edge> edges_j,
                   Matrix edge);

    std::size_t rows() const { return node_.rows(); }
    std::size_t cols() const { return node_.cols(); }

    const Matrix& node() const { return node_; }
    const Matrix& edge() const { return edge_; }
    const std::vector<Edge>& edges_i() const { return edges_i_; }
    const std::vector<Edge>& edges_j() const { return edges_j_; }

    /// Index into edges_j() of the edge {c, d}, or -1.
    long edge_index_j(std::size_t c, std::size_t d) const
    {
        return edge_lookup_j_[c * cols() + d];
    }

    /// Affinity for the graph pair in swapped order.
    AffinityMatrix transposed() const;

    /// vec(X)^T K vec(X) computed on the factored form.
    double score(const Assignment& x) const;

private:
    Matrix node_;
    std::vector<Edge> edges_i_;
    std::vector<Edge> edges_j_;
    Matrix edge_;
    std::vector<long> edge_lookup_j_;
};

/// Hand-crafted geometric affinity: no node term; each edge pair scores
/// exp(-(beta |d1 - d2| + (1 - beta) |t1 - t2|) / sigma_sq).
AffinityMatrix build_raw_affinity(const PointGraph& gi, const PointGraph& gj, double beta,
                                  double sigma_sq);

/// Lawler objective of `x` under `k`: node terms of matched rows plus, for every ordered pair
/// of matches (a->c, b->d) with ab in E_i and cd in E_j, the edge affinity. Each matched
/// undirected edge pair therefore counts twice. Throws ContractViolation on shape mismatch.
double affinity_score(const Assignment& x, const AffinityMatrix& k);

/// Pair score J_ij used for ranking, clustering and the joint objective: the Lawler score
/// divided by min(n_i, n_j) so that graph pairs of different sizes are comparable.
double pair_score(const Assignment& x, const AffinityMatrix& k);

/// k_a + alpha * k_b, rescaled by the largest resulting entry so everything stays in [0, 1].
/// Both inputs must share shape and edge lists.
AffinityMatrix fuse_affinity(const AffinityMatrix& k_a, const AffinityMatrix& k_b, double alpha);

} // namespace m3c
