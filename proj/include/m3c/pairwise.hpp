#pragma once

#include "m3c/affinity.hpp"
#include "m3c/assignment.hpp"
#include "m3c/graph.hpp"
#include "m3c/matrix.hpp"

namespace m3c {

/// Reweighted random walk parameters. Defaults are the customary values of the original method.
struct RrwmParams {
    double jump_prob = 0.2;   ///< weight of the reweighted jump in the walk/jump mixture
    double inflation = 30.0;  ///< exponent scale of the reweighting
    int sinkhorn_iters = 10;
    double tol = 1e-6;
    int max_iters = 300;

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// Soft two-graph matching by reweighted random walks on the factored affinity.
///
/// Starting from the uniform distribution, each step walks (y = Kx, L1-normalised), builds the
/// reweighted jump exp(inflation * y / max y) projected by Sinkhorn normalisation, mixes
/// x = jump_prob * jump + (1 - jump_prob) * y and renormalises. Stops once the L1 change
/// falls below tol. The result is an n_i x n_j matrix of total mass 1.
Matrix rrwm(const AffinityMatrix& k, const RrwmParams& params = {});

/// Exact maximum-weight assignment of min(rows, cols) pairs (Kuhn-Munkres).
Assignment hungarian(const Matrix& score);

/// hungarian(rrwm(k)).
Assignment solve_pairwise(const PointGraph& gi, const PointGraph& gj, const AffinityMatrix& k,
                          const RrwmParams& params = {});

} // namespace m3c
