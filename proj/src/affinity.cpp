#include "m3c/affinity.hpp"

#include "m3c/error.hpp"

#include <algorithm>
#include <cmath>

namespace m3c {

namespace {

void check_unit_interval(const Matrix& m, const char* what)
{
    for (double v : m.data())
        if (!(v >= 0.0 && v <= 1.0))
            throw ContractViolation(std::string("affinity: ") + what + " entry outside [0, 1]");
}

} // namespace

AffinityMatrix::AffinityMatrix(Matrix node, std::vector<Edge> edges_i, std::vector<Edge> edges_j,
                               Matrix edge)
    : node_(std::move(node))
    , edges_i_(std::move(edges_i))
    , edges_j_(std::move(edges_j))
    , edge_(std::move(edge))
    , edge_lookup_j_(node_.cols() * node_.cols(), -1)
{
    if (edge_.rows() != edges_i_.size() || edge_.cols() != edges_j_.size())
        throw ContractViolation("affinity: edge block shape does not match edge lists");
    check_unit_interval(node_, "node");
    check_unit_interval(edge_, "edge");
    for (const auto& [a, b] : edges_i_)
        if (a >= rows() || b >= rows() || a == b)
            throw ContractViolation("affinity: edge of graph i references a missing node");
    for (std::size_t e = 0; e < edges_j_.size(); ++e) {
        const auto [c, d] = edges_j_[e];
        if (c >= cols() || d >= cols() || c == d)
            throw ContractViolation("affinity: edge of graph j references a missing node");
        edge_lookup_j_[c * cols() + d] = static_cast<long>(e);
        edge_lookup_j_[d * cols() + c] = static_cast<long>(e);
    }
}

AffinityMatrix AffinityMatrix::transposed() const
{
    return AffinityMatrix(node_.transposed(), edges_j_, edges_i_, edge_.transposed());
}

double AffinityMatrix::score(const Assignment& x) const
{
    if (x.rows() != rows() || x.cols() != cols())
        throw ContractViolation("affinity_score: assignment shape does not match affinity");
    double total = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r)
        if (const auto c = x[r]; c && *c < cols())
            total += node_(r, *c);
    double edges = 0.0;
    for (std::size_t e = 0; e < edges_i_.size(); ++e) {
        const auto c = x[edges_i_[e].first];
        const auto d = x[edges_i_[e].second];
        if (!c || !d || *c >= cols() || *d >= cols())
            continue;
        if (const long f = edge_index_j(*c, *d); f >= 0)
            edges += edge_(e, static_cast<std::size_t>(f));
    }
    // (a->c, b->d) and (b->d, a->c) are both ordered match pairs.
    return total + 2.0 * edges;
}

std::vector<EdgeFeature> extract_edge_features(const PointGraph& g)
{
    std::vector<EdgeFeature> out;
    out.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        const Point p = g.points()[a];
        const Point q = g.points()[b];
        const double dx = q.x - p.x;
        const double dy = q.y - p.y;
        out.push_back({std::sqrt(dx * dx + dy * dy), std::atan(dy / (dx + kAngleEpsilon))});
    }
    return out;
}

AffinityMatrix build_raw_affinity(const PointGraph& gi, const PointGraph& gj, double beta,
                                  double sigma_sq)
{
    if (!(beta >= 0.0 && beta <= 1.0))
        throw ContractViolation("build_raw_affinity: beta must lie in [0, 1]");
    if (!(sigma_sq > 0.0))
        throw ContractViolation("build_raw_affinity: sigma_sq must be positive");
    const auto fi = extract_edge_features(gi);
    const auto fj = extract_edge_features(gj);
    Matrix edge(fi.size(), fj.size());
    for (std::size_t a = 0; a < fi.size(); ++a)
        for (std::size_t b = 0; b < fj.size(); ++b) {
            const double dist = beta * std::abs(fi[a].length - fj[b].length) +
                                (1.0 - beta) * std::abs(fi[a].angle - fj[b].angle);
            edge(a, b) = std::exp(-dist / sigma_sq);
        }
    return AffinityMatrix(Matrix(gi.size(), gj.size()), gi.edges(), gj.edges(), std::move(edge));
}

double affinity_score(const Assignment& x, const AffinityMatrix& k) { return k.score(x); }

double pair_score(const Assignment& x, const AffinityMatrix& k)
{
    return k.score(x) / static_cast<double>(std::min(k.rows(), k.cols()));
}

AffinityMatrix fuse_affinity(const AffinityMatrix& k_a, const AffinityMatrix& k_b, double alpha)
{
    if (k_a.rows() != k_b.rows() || k_a.cols() != k_b.cols() ||
        k_a.edges_i() != k_b.edges_i() || k_a.edges_j() != k_b.edges_j())
        throw ContractViolation("fuse_affinity: affinities have different shapes");
    Matrix node = k_a.node();
    Matrix edge = k_a.edge();
    for (std::size_t i = 0; i < node.data().size(); ++i)
        node.data()[i] += alpha * k_b.node().data()[i];
    for (std::size_t i = 0; i < edge.data().size(); ++i)
        edge.data()[i] += alpha * k_b.edge().data()[i];

    double peak = 0.0;
    for (double v : node.data())
        peak = std::max(peak, v);
    for (double v : edge.data())
        peak = std::max(peak, v);
    if (peak > 0.0) {
        for (double& v : node.data())
            v /= peak;
        for (double& v : edge.data())
            v /= peak;
    }
    return AffinityMatrix(std::move(node), k_a.edges_i(), k_a.edges_j(), std::move(edge));
}

} // namespace m3c
