#include "m3c/indicator.hpp"

#include "m3c/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace m3c {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

void check_weights(const Matrix& w)
{
    if (w.rows() != w.cols())
        throw ContractViolation("indicator: weight matrix must be square");
}

void check_ratio(double r)
{
    if (!(r > 0.0 && r <= 1.0))
        throw ContractViolation("indicator: ratio r must lie in (0, 1]");
}

std::vector<Pair> all_pairs(std::size_t n)
{
    std::vector<Pair> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

// rank[v][u]: 1-based position of u in v's neighbour list sorted by descending weight,
// ties to the smaller index.
std::vector<std::vector<std::size_t>> neighbour_ranks(const Matrix& w)
{
    const std::size_t n = w.rows();
    std::vector<std::vector<std::size_t>> rank(n, std::vector<std::size_t>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> order;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v)
                order.push_back(u);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return w(v, a) > w(v, b); });
        for (std::size_t pos = 0; pos < order.size(); ++pos)
            rank[v][order[pos]] = pos + 1;
    }
    return rank;
}

ClusterIndicator select_prefix(std::size_t n, const std::vector<Pair>& order, std::size_t count)
{
    ClusterIndicator c(n);
    for (std::size_t p = 0; p < count && p < order.size(); ++p)
        c.set(order[p].first, order[p].second);
    return c;
}

// Union-find over graph indices.
class Components {
public:
    explicit Components(std::size_t n) : parent_(n), count_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t a)
    {
        while (parent_[a] != a)
            a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        parent_[std::max(a, b)] = std::min(a, b);
        --count_;
    }
    std::size_t count() const { return count_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t count_;
};

Components components_of(const ClusterIndicator& c)
{
    Components comp(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c(i, j))
                comp.unite(i, j);
    return comp;
}

} // namespace

bool check_transitive(const ClusterIndicator& c)
{
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!c(i, j))
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (c(j, k) && !c(i, k))
                    return false;
        }
    return true;
}

std::size_t scc_count(const ClusterIndicator& c) { return components_of(c).count(); }

bool is_connected(const ClusterIndicator& c) { return scc_count(c) <= 1; }

std::size_t global_pair_budget(std::size_t n, double r)
{
    check_ratio(r);
    const std::size_t max_pairs = n * (n - (n > 0)) / 2;
    if (max_pairs == 0)
        return 0;
    const auto budget = static_cast<std::size_t>(
        std::floor(r * static_cast<double>(n) * static_cast<double>(n) / 2.0));
    return std::clamp<std::size_t>(budget, 1, max_pairs);
}

std::size_t local_neighbour_budget(std::size_t n, double r)
{
    check_ratio(r);
    if (n < 2)
        return 0;
    const auto budget = static_cast<std::size_t>(std::floor(r * static_cast<double>(n)));
    return std::clamp<std::size_t>(budget, 1, n - 1);
}

std::vector<Pair> ranked_pairs(const Matrix& weights, Scheme scheme)
{
    check_weights(weights);
    const std::size_t n = weights.rows();
    auto pairs = all_pairs(n);
    const auto by_weight = [&](const Pair& a, const Pair& b) {
        return weights(a.first, a.second) > weights(b.first, b.second);
    };

    switch (scheme) {
    case Scheme::global:
        std::stable_sort(pairs.begin(), pairs.end(), by_weight);
        break;
    case Scheme::local:
    case Scheme::fuse: {
        const auto rank = neighbour_ranks(weights);
        const auto key = [&](const Pair& p) {
            const std::size_t a = rank[p.second][p.first];
            const std::size_t b = rank[p.first][p.second];
            return scheme == Scheme::fuse ? a + b : std::min(a, b);
        };
        std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            const auto ka = key(a);
            const auto kb = key(b);
            if (ka != kb)
                return ka < kb;
            return by_weight(a, b);
        });
        break;
    }
    case Scheme::hard:
        throw ContractViolation("ranked_pairs: the hard scheme has no pair ranking");
    }
    return pairs;
}

ClusterIndicator global_rank_indicator(const Matrix& weights, double r)
{
    const std::size_t n = weights.rows();
    return select_prefix(n, ranked_pairs(weights, Scheme::global), global_pair_budget(n, r));
}

ClusterIndicator local_rank_indicator(const Matrix& weights, double r)
{
    check_weights(weights);
    const std::size_t n = weights.rows();
    const std::size_t m = local_neighbour_budget(n, r);
    const auto rank = neighbour_ranks(weights);
    ClusterIndicator c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rank[i][j] <= m)
                c.set(i, j);
    return c;
}

ClusterIndicator fuse_rank_indicator(const Matrix& weights, double r)
{
    const std::size_t n = weights.rows();
    return select_prefix(n, ranked_pairs(weights, Scheme::fuse), global_pair_budget(n, r));
}

ClusterIndicator auto_connect_indicator(const Matrix& weights, Scheme scheme)
{
    const std::size_t n = weights.rows();
    ClusterIndicator c(n);
    Components comp(n);
    for (const auto& [i, j] : ranked_pairs(weights, scheme)) {
        if (comp.count() <= 1)
            break;
        c.set(i, j);
        comp.unite(i, j);
    }
    return c;
}

ClusterIndicator division_to_indicator(const ClusterDivision& d)
{
    ClusterIndicator c(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] == d[j])
                c.set(i, j);
    return c;
}

ClusterDivision indicator_to_division(const ClusterIndicator& c)
{
    auto comp = components_of(c);
    // Roots are the smallest member of each component, so canonical() numbers components by
    // smallest member.
    std::vector<std::size_t> roots(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        roots[i] = comp.find(i);
    std::vector<std::size_t> dense(c.size(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (roots[i] == i)
            dense[i] = next++;
    std::vector<std::size_t> labels(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        labels[i] = dense[roots[i]];
    return ClusterDivision(std::move(labels));
}

std::size_t structure_change(const ClusterIndicator& prev, const ClusterIndicator& next)
{
    if (prev.size() != next.size())
        throw ContractViolation("structure_change: indicators differ in size");
    std::size_t changed = 0;
    for (std::size_t i = 0; i < prev.size(); ++i)
        for (std::size_t j = 0; j < prev.size(); ++j)
            if (i != j && prev(i, j) != next(i, j))
                ++changed;
    return changed;
}

} // namespace m3c
