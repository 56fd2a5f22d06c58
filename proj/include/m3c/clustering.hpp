#pragma once

#include "m3c/matrix.hpp"
#include "m3c/types.hpp"

#include <cstdint>
#include <vector>

namespace m3c {

struct SpectralParams {
    int kmeans_restarts = 10;
    int kmeans_max_iters = 100;
    double eigen_tol = 1e-12;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Keeps w_ij iff i is among j's k nearest (highest-weight) neighbours or j among i's.
/// Ties go to the smaller index. The diagonal is zeroed.
Matrix knn_sparsify(const Matrix& weights, std::size_t k);

struct EigenDecomposition {
    std::vector<double> values; ///< ascending
    Matrix vectors;             ///< column c is the eigenvector of values[c]
};

/// Cyclic Jacobi rotations for a symmetric matrix. Iterates until the off-diagonal
/// Frobenius norm drops below tol times the matrix norm (or a sweep cap is reached).
EigenDecomposition symmetric_eigen(const Matrix& a, double tol = 1e-12);

/// L_sym = I - D^-1/2 W D^-1/2 with D^-1/2 = 0 on isolated nodes.
Matrix normalized_laplacian(const Matrix& weights);

/// Spectral embedding on the n_clusters smallest eigenvectors of L_sym, row-normalised, then
/// seeded k-means++ with restarts (lowest inertia wins, earliest restart on ties).
/// Throws ConfigError when n_clusters is 0 or exceeds N.
ClusterDivision spectral_cluster(const Matrix& weights, std::size_t n_clusters,
                                 const SpectralParams& params = {});

} // namespace m3c
