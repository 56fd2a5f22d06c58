#include "m3c/types.hpp"

#include "m3c/error.hpp"

#include <algorithm>
#include <limits>

namespace m3c {

MatchingSet::MatchingSet(const std::vector<std::size_t>& node_counts) : node_counts_(node_counts)
{
    const std::size_t n = node_counts_.size();
    upper_.reserve(n * (n - (n > 0)) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            upper_.emplace_back(node_counts_[i], node_counts_[j]);
}

std::size_t MatchingSet::slot(std::size_t i, std::size_t j) const
{
    const std::size_t n = size();
    if (i >= n || j >= n || i == j)
        throw ContractViolation("matching set: invalid pair index");
    if (i > j)
        std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Assignment MatchingSet::at(std::size_t i, std::size_t j) const
{
    const auto& x = upper_[slot(i, j)];
    return i < j ? x : transpose(x);
}

void MatchingSet::set(std::size_t i, std::size_t j, const Assignment& x)
{
    if (x.rows() != node_counts_[i] || x.cols() != node_counts_[j])
        throw ContractViolation("matching set: assignment shape does not match graphs");
    upper_[slot(i, j)] = i < j ? x : transpose(x);
}

ClusterIndicator::ClusterIndicator(std::size_t n) : n_(n), bits_(n * n, false)
{
    for (std::size_t i = 0; i < n; ++i)
        bits_[i * n + i] = true;
}

ClusterIndicator ClusterIndicator::complete(std::size_t n)
{
    ClusterIndicator c(n);
    std::fill(c.bits_.begin(), c.bits_.end(), true);
    return c;
}

void ClusterIndicator::set(std::size_t i, std::size_t j, bool value)
{
    if (i >= n_ || j >= n_)
        throw ContractViolation("indicator index out of range");
    if (i == j) {
        if (!value)
            throw ContractViolation("indicator diagonal is fixed to true");
        return;
    }
    bits_[i * n_ + j] = value;
    bits_[j * n_ + i] = value;
}

std::size_t ClusterIndicator::pair_count() const
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            count += (*this)(i, j);
    return count;
}

ClusterDivision::ClusterDivision(std::vector<std::size_t> labels) : labels_(std::move(labels))
{
    if (labels_.empty())
        return;
    n_clusters_ = *std::max_element(labels_.begin(), labels_.end()) + 1;
    std::vector<bool> used(n_clusters_, false);
    for (auto l : labels_)
        used[l] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw ContractViolation("cluster division: label ids are not dense");
}

ClusterDivision ClusterDivision::canonical() const
{
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> remap(n_clusters_, unset);
    std::vector<std::size_t> out(labels_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto& m = remap[labels_[i]];
        if (m == unset)
            m = next++;
        out[i] = m;
    }
    return ClusterDivision(std::move(out));
}

std::vector<std::vector<std::size_t>> ClusterDivision::members() const
{
    std::vector<std::vector<std::size_t>> out(n_clusters_);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out[labels_[i]].push_back(i);
    return out;
}

} // namespace m3c
