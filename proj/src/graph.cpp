#include "m3c/graph.hpp"

#include "m3c/error.hpp"

#include <algorithm>

namespace m3c {

PointGraph::PointGraph(std::string id, std::vector<Point> points, std::vector<Edge> edges,
                       std::optional<std::string> class_label,
                       std::optional<std::size_t> inlier_count)
    : id_(std::move(id))
    , points_(std::move(points))
    , edges_(std::move(edges))
    , class_label_(std::move(class_label))
    , inlier_count_(inlier_count)
{
    if (points_.empty())
        throw ContractViolation("graph '" + id_ + "' has no nodes");
    if (inlier_count_ && *inlier_count_ > points_.size())
        throw ContractViolation("graph '" + id_ + "' inlier count exceeds node count");
    for (auto& e : edges_) {
        if (e.first == e.second)
            throw ContractViolation("graph '" + id_ + "' has a self-loop");
        if (e.first >= points_.size() || e.second >= points_.size())
            throw ContractViolation("graph '" + id_ + "' edge endpoint out of range");
        if (e.first > e.second)
            std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

} // namespace m3c
