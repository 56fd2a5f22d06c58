#include "m3c/clustering.hpp"

#include "m3c/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace m3c {

void SpectralParams::validate() const
{
    if (kmeans_restarts < 1 || kmeans_max_iters < 1)
        throw ConfigError("spectral: k-means restarts and iterations must be positive");
    if (!(eigen_tol > 0.0))
        throw ConfigError("spectral: eigen_tol must be positive");
}

Matrix knn_sparsify(const Matrix& weights, std::size_t k)
{
    if (weights.rows() != weights.cols())
        throw ContractViolation("knn_sparsify: weight matrix must be square");
    if (k < 1)
        throw ContractViolation("knn_sparsify: k must be at least 1");
    const std::size_t n = weights.rows();
    std::vector<std::vector<bool>> keep(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                order.push_back(j);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return weights(i, a) > weights(i, b);
        });
        for (std::size_t p = 0; p < std::min(k, order.size()); ++p) {
            keep[i][order[p]] = true;
            keep[order[p]][i] = true;
        }
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (keep[i][j])
                out(i, j) = weights(i, j);
    return out;
}

EigenDecomposition symmetric_eigen(const Matrix& input, double tol)
{
    if (input.rows() != input.cols())
        throw ContractViolation("symmetric_eigen: matrix must be square");
    const std::size_t n = input.rows();
    Matrix a = input;
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        v(i, i) = 1.0;

    double norm = 0.0;
    for (double x : a.data())
        norm += x * x;
    norm = std::sqrt(norm);

    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += 2.0 * a(p, q) * a(p, q);
        if (std::sqrt(off) <= tol * norm || off == 0.0)
            break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < n; ++r)
            out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

Matrix normalized_laplacian(const Matrix& weights)
{
    const std::size_t n = weights.rows();
    Matrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                w(i, j) = 0.5 * (weights(i, j) + weights(j, i));
    std::vector<double> inv_sqrt_deg(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double d = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            d += w(i, j);
        if (d > 0.0)
            inv_sqrt_deg[i] = 1.0 / std::sqrt(d);
    }
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            l(i, j) = (i == j ? 1.0 : 0.0) - inv_sqrt_deg[i] * w(i, j) * inv_sqrt_deg[j];
    return l;
}

namespace {

using Rng = std::mt19937_64;

double sq_dist(const Matrix& pts, std::size_t i, const Matrix& centers, std::size_t c)
{
    double s = 0.0;
    for (std::size_t d = 0; d < pts.cols(); ++d) {
        const double diff = pts(i, d) - centers(c, d);
        s += diff * diff;
    }
    return s;
}

double unit(Rng& rng) { return std::generate_canonical<double, 53>(rng); }

Matrix kmeans_pp_seed(const Matrix& pts, std::size_t k, Rng& rng)
{
    const std::size_t n = pts.rows();
    Matrix centers(k, pts.cols());
    const auto copy_row = [&](std::size_t c, std::size_t i) {
        for (std::size_t d = 0; d < pts.cols(); ++d)
            centers(c, d) = pts(i, d);
    };
    std::vector<bool> chosen(n, false);
    std::size_t first = std::min<std::size_t>(static_cast<std::size_t>(unit(rng) * n), n - 1);
    copy_row(0, first);
    chosen[first] = true;
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            best[i] = std::min(best[i], sq_dist(pts, i, centers, c - 1));
            total += best[i];
        }
        std::size_t pick = n;
        if (total > 0.0) {
            double target = unit(rng) * total;
            for (std::size_t i = 0; i < n; ++i) {
                if (best[i] <= 0.0)
                    continue;
                pick = i;
                target -= best[i];
                if (target < 0.0)
                    break;
            }
        }
        if (pick == n) {
            // Every remaining point coincides with a center; take the first unchosen one.
            pick = static_cast<std::size_t>(
                std::find(chosen.begin(), chosen.end(), false) - chosen.begin());
        }
        copy_row(c, pick);
        chosen[pick] = true;
    }
    return centers;
}

struct KMeansResult {
    std::vector<std::size_t> labels;
    double inertia = 0.0;
};

KMeansResult lloyd(const Matrix& pts, Matrix centers, int max_iters)
{
    const std::size_t n = pts.rows();
    const std::size_t k = centers.rows();
    std::vector<std::size_t> labels(n, 0);
    for (int it = 0; it < max_iters; ++it) {
        bool changed = it == 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_d = sq_dist(pts, i, centers, 0);
            for (std::size_t c = 1; c < k; ++c) {
                const double d = sq_dist(pts, i, centers, c);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }

        // Refill empty clusters with the point farthest from its center among clusters that
        // can spare one.
        std::vector<std::size_t> sizes(k, 0);
        for (auto l : labels)
            ++sizes[l];
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] != 0)
                continue;
            std::size_t far = n;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (sizes[labels[i]] < 2)
                    continue;
                const double d = sq_dist(pts, i, centers, labels[i]);
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            --sizes[labels[far]];
            labels[far] = c;
            sizes[c] = 1;
            for (std::size_t d = 0; d < pts.cols(); ++d)
                centers(c, d) = pts(far, d);
            changed = true;
        }

        if (!changed)
            break;
        Matrix next(k, pts.cols());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < pts.cols(); ++d)
                next(labels[i], d) += pts(i, d);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t d = 0; d < pts.cols(); ++d)
                next(c, d) /= static_cast<double>(sizes[c]);
        centers = std::move(next);
    }

    KMeansResult out{labels, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        out.inertia += sq_dist(pts, i, centers, labels[i]);
    return out;
}

} // namespace

ClusterDivision spectral_cluster(const Matrix& weights, std::size_t n_clusters,
                                 const SpectralParams& params)
{
    params.validate();
    if (weights.rows() != weights.cols())
        throw ContractViolation("spectral_cluster: weight matrix must be square");
    const std::size_t n = weights.rows();
    if (n_clusters < 1 || n_clusters > n)
        throw ConfigError("spectral_cluster: need 1 <= n_clusters <= number of graphs");

    const auto eig = symmetric_eigen(normalized_laplacian(weights), params.eigen_tol);
    Matrix embedding(n, n_clusters);
    for (std::size_t i = 0; i < n; ++i) {
        double norm = 0.0;
        for (std::size_t c = 0; c < n_clusters; ++c) {
            embedding(i, c) = eig.vectors(i, c);
            norm += embedding(i, c) * embedding(i, c);
        }
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (std::size_t c = 0; c < n_clusters; ++c)
                embedding(i, c) /= norm;
    }

    Rng rng(params.seed);
    KMeansResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < params.kmeans_restarts; ++restart) {
        auto result = lloyd(embedding, kmeans_pp_seed(embedding, n_clusters, rng),
                            params.kmeans_max_iters);
        if (result.inertia < best.inertia)
            best = std::move(result);
    }
    return ClusterDivision(std::move(best.labels)).canonical();
}

} // namespace m3c
