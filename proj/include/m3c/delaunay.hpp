#pragma once

#include "m3c/graph.hpp"

#include <vector>

namespace m3c {

/// Magnitude of the deterministic perturbation applied to degenerate inputs.
inline constexpr double kDelaunayJitter = 1e-9;

/// Edges of the Delaunay triangulation (Bowyer-Watson, incremental), sorted with
/// first < second. Inputs with three collinear or four co-circular points are perturbed by a
/// seeded jitter of magnitude kDelaunayJitter first. Two points yield their single edge and one
/// point none. Throws ContractViolation on duplicate points.
std::vector<Edge> delaunay(const std::vector<Point>& points);

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
double orient2d(Point a, Point b, Point c);

/// Positive when d lies strictly inside the circumcircle of the counter-clockwise triangle abc.
double incircle(Point a, Point b, Point c, Point d);

} // namespace m3c
