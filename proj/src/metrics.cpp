#include "m3c/metrics.hpp"

#include "m3c/error.hpp"

#include <algorithm>

namespace m3c {

namespace {

void check_same_size(const ClusterDivision& a, const ClusterDivision& b)
{
    if (a.size() != b.size() || a.size() == 0)
        throw ContractViolation("metrics: divisions must cover the same non-empty graph set");
}

// overlap[p][t] = |P_p & C_t|
std::vector<std::vector<double>> contingency(const ClusterDivision& pred,
                                             const ClusterDivision& truth)
{
    std::vector<std::vector<double>> out(pred.n_clusters(),
                                         std::vector<double>(truth.n_clusters(), 0.0));
    for (std::size_t i = 0; i < pred.size(); ++i)
        out[pred[i]][truth[i]] += 1.0;
    return out;
}

} // namespace

MatchingAccuracy matching_accuracy(const MatchingSet& pred, const MatchingSet& truth,
                                   const ClusterIndicator& same_cluster)
{
    const std::size_t n = truth.size();
    if (pred.size() != n || same_cluster.size() != n)
        throw ContractViolation("matching_accuracy: inputs cover different graph counts");
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !same_cluster(i, j))
                continue;
            const Assignment gt = truth.at(i, j);
            const Assignment x = pred.at(i, j);
            const auto gt_matches = gt.matches();
            if (gt_matches.empty())
                continue;
            std::size_t correct = 0;
            for (const auto& [r, c] : gt_matches)
                correct += x[r] == c;
            total += static_cast<double>(correct) / static_cast<double>(gt_matches.size());
            ++pairs;
        }
    if (pairs == 0)
        return {0.0, false};
    return {total / static_cast<double>(pairs), true};
}

double clustering_purity(const ClusterDivision& pred, const ClusterDivision& truth)
{
    check_same_size(pred, truth);
    double sum = 0.0;
    for (const auto& row : contingency(pred, truth))
        sum += *std::max_element(row.begin(), row.end());
    return sum / static_cast<double>(pred.size());
}

double rand_index(const ClusterDivision& pred, const ClusterDivision& truth)
{
    check_same_size(pred, truth);
    const std::size_t n = pred.size();
    std::size_t agree = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            agree += (pred[i] == pred[j]) == (truth[i] == truth[j]);
    return static_cast<double>(agree) / static_cast<double>(n * n);
}

double clustering_accuracy(const ClusterDivision& pred, const ClusterDivision& truth)
{
    check_same_size(pred, truth);
    const auto overlap = contingency(pred, truth);
    std::vector<double> true_size(truth.n_clusters(), 0.0);
    for (std::size_t i = 0; i < truth.size(); ++i)
        true_size[truth[i]] += 1.0;

    double split = 0.0;
    for (std::size_t a = 0; a < truth.n_clusters(); ++a)
        for (std::size_t p = 0; p < pred.n_clusters(); ++p)
            for (std::size_t q = 0; q < pred.n_clusters(); ++q)
                if (p != q)
                    split += overlap[p][a] * overlap[q][a] / (true_size[a] * true_size[a]);

    double merge = 0.0;
    for (std::size_t p = 0; p < pred.n_clusters(); ++p)
        for (std::size_t a = 0; a < truth.n_clusters(); ++a)
            for (std::size_t b = 0; b < truth.n_clusters(); ++b)
                if (a != b)
                    merge += overlap[p][a] * overlap[p][b] / (true_size[a] * true_size[b]);

    return 1.0 - (split + merge) / static_cast<double>(truth.n_clusters());
}

} // namespace m3c
