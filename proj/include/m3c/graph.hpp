#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace m3c {

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

/// Undirected edge stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;

/// A keypoint graph: node coordinates in the unit square plus undirected edges.
class PointGraph {
public:
    /// Validates the invariants; throws ContractViolation on a bad edge, an empty point set or
    /// an inlier count above the node count. Edges are canonicalised, sorted and deduplicated.
    PointGraph(std::string id, std::vector<Point> points, std::vector<Edge> edges,
               std::optional<std::string> class_label = std::nullopt,
               std::optional<std::size_t> inlier_count = std::nullopt);

    const std::string& id() const { return id_; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<std::string>& class_label() const { return class_label_; }
    const std::optional<std::size_t>& inlier_count() const { return inlier_count_; }

    std::size_t size() const { return points_.size(); }

    bool operator==(const PointGraph&) const = default;

private:
    std::string id_;
    std::vector<Point> points_;
    std::vector<Edge> edges_;
    std::optional<std::string> class_label_;
    std::optional<std::size_t> inlier_count_;
};

} // namespace m3c
