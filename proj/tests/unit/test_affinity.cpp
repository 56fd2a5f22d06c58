#include "doctest.h"
#include "oracles.hpp"

#include "m3c/affinity.hpp"
#include "m3c/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

using m3c::AffinityMatrix;
using m3c::Assignment;
using m3c::Matrix;
using m3c::PointGraph;

namespace {

PointGraph segment(m3c::Point a, m3c::Point b) { return PointGraph("s", {a, b}, {{0, 1}}); }

PointGraph random_graph(std::mt19937_64& rng, std::size_t n, double density)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<m3c::Point> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({u(rng), u(rng)});
    std::vector<m3c::Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (u(rng) < density)
                edges.emplace_back(a, b);
    return PointGraph("r", pts, edges);
}

} // namespace

TEST_CASE("edge features")
{
    const auto f1 = m3c::extract_edge_features(segment({0, 0}, {1, 0}));
    CHECK(f1[0].length == doctest::Approx(1.0));
    CHECK(f1[0].angle == doctest::Approx(0.0));

    const auto f2 = m3c::extract_edge_features(segment({0, 0}, {0, 1}));
    CHECK(f2[0].length == doctest::Approx(1.0));
    CHECK(f2[0].angle == doctest::Approx(std::numbers::pi / 2).epsilon(1e-8));
    CHECK(std::isfinite(f2[0].angle));

    const auto f3 = m3c::extract_edge_features(segment({0, 0}, {1, 1}));
    CHECK(f3[0].length == doctest::Approx(std::sqrt(2.0)));
    CHECK(f3[0].angle == doctest::Approx(std::numbers::pi / 4).epsilon(1e-8));
}

TEST_CASE("raw edge affinity values")
{
    const auto base = segment({0, 0}, {1, 0});
    const auto same = m3c::build_raw_affinity(base, base, 0.9, 0.03);
    CHECK(same.edge()(0, 0) == doctest::Approx(1.0));
    CHECK(same.node()(0, 0) == 0.0);

    // length differs by 0.03, same direction
    const auto longer = segment({0, 0}, {1.03, 0});
    CHECK(m3c::build_raw_affinity(base, longer, 0.9, 0.03).edge()(0, 0) ==
          doctest::Approx(0.4065696597405991).epsilon(1e-9));

    // same length, direction differs by 0.3 rad
    const auto turned = segment({0, 0}, {std::cos(0.3), std::sin(0.3)});
    CHECK(m3c::build_raw_affinity(base, turned, 0.9, 0.03).edge()(0, 0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-6));
}

TEST_CASE("affinity score examples")
{
    const PointGraph a("a", {{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}});
    const AffinityMatrix zero(Matrix(3, 3), a.edges(), a.edges(), Matrix(2, 2));
    CHECK(m3c::affinity_score(Assignment::identity(3), zero) == 0.0);

    Matrix node(1, 1);
    node(0, 0) = 0.7;
    const AffinityMatrix single(node, {}, {}, Matrix(0, 0));
    CHECK(m3c::affinity_score(Assignment::identity(1), single) == doctest::Approx(0.7));
    CHECK(m3c::pair_score(Assignment::identity(1), single) == doctest::Approx(0.7));
}

TEST_CASE("isomorphic triangles: the planted permutation is the best of all six")
{
    const std::vector<m3c::Point> pts{{0.1, 0.2}, {0.7, 0.3}, {0.4, 0.9}};
    const std::vector<m3c::Edge> tri{{0, 1}, {0, 2}, {1, 2}};
    const PointGraph g1("g1", pts, tri);
    // node v of g2 is node perm[v] of g1
    const std::vector<std::size_t> perm{2, 0, 1};
    std::vector<m3c::Point> pts2(3);
    for (std::size_t v = 0; v < 3; ++v)
        pts2[v] = pts[perm[v]];
    const PointGraph g2("g2", pts2, tri);
    const auto k = m3c::build_raw_affinity(g1, g2, 0.9, 0.03);

    Assignment planted(3, 3);
    for (std::size_t v = 0; v < 3; ++v)
        planted.set(perm[v], v);
    const double best = oracle::best_qap_value(k);
    CHECK(m3c::affinity_score(planted, k) == doctest::Approx(best));
    CHECK(m3c::affinity_score(planted, k) == doctest::Approx(6.0)); // 3 edges, both orientations
}

TEST_CASE("factored score equals the dense Lawler form on random graphs")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gi = random_graph(rng, 2 + trial % 4, 0.6);
        const auto gj = random_graph(rng, 2 + (trial / 4) % 4, 0.6);
        Matrix node(gi.size(), gj.size());
        for (std::size_t a = 0; a < gi.size(); ++a)
            for (std::size_t c = 0; c < gj.size(); ++c)
                node(a, c) = u(rng);
        Matrix edge(gi.edges().size(), gj.edges().size());
        for (std::size_t e = 0; e < gi.edges().size(); ++e)
            for (std::size_t f = 0; f < gj.edges().size(); ++f)
                edge(e, f) = u(rng);
        const AffinityMatrix k(node, gi.edges(), gj.edges(), edge);
        for (const auto& x : oracle::all_assignments(gi.size(), gj.size())) {
            REQUIRE(m3c::affinity_score(x, k) == doctest::Approx(oracle::dense_lawler(x, k)));
            REQUIRE(k.transposed().score(transpose(x)) == doctest::Approx(k.score(x)));
        }
    }
}

TEST_CASE("pair score normalises by the smaller graph")
{
    const PointGraph a("a", {{0, 0}, {1, 0}}, {{0, 1}});
    const PointGraph b("b", {{0, 0}, {1, 0}, {5, 5}}, {{0, 1}});
    const auto k = m3c::build_raw_affinity(a, b, 0.9, 0.03);
    const Assignment x(2, 3, {{0, 0}, {1, 1}});
    CHECK(m3c::affinity_score(x, k) == doctest::Approx(2.0));
    CHECK(m3c::pair_score(x, k) == doctest::Approx(1.0));
}

TEST_CASE("fused affinity")
{
    const std::vector<m3c::Edge> one{{0, 1}};
    Matrix na(2, 2), nb(2, 2), e(1, 1);
    na(0, 0) = 0.2;
    nb(0, 0) = 0.8;
    na(1, 1) = 1.0;
    nb(1, 1) = 1.0;
    const AffinityMatrix ka(na, one, one, e);
    const AffinityMatrix kb(nb, one, one, e);

    // 0.2 + 0.5 * 0.8 = 0.6 and 1 + 0.5 = 1.5 before rescaling by the largest entry
    const auto f = m3c::fuse_affinity(ka, kb, 0.5);
    CHECK(f.node()(0, 0) == doctest::Approx(0.6 / 1.5));
    CHECK(f.node()(1, 1) == doctest::Approx(1.0));

    const auto only_a = m3c::fuse_affinity(ka, kb, 0.0);
    CHECK(only_a.node()(0, 0) == doctest::Approx(0.2));
    CHECK(only_a.node()(1, 1) == doctest::Approx(1.0));

    const auto twice = m3c::fuse_affinity(ka, ka, 1.0);
    CHECK(twice.node()(0, 0) == doctest::Approx(0.2));
    CHECK(twice.node()(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("affinity entries must lie in [0, 1]")
{
    Matrix node(1, 1);
    node(0, 0) = 1.5;
    CHECK_THROWS_AS(AffinityMatrix(node, {}, {}, Matrix(0, 0)), m3c::ContractViolation);
    CHECK_THROWS_AS(AffinityMatrix(Matrix(1, 1), {{0, 1}}, {}, Matrix(1, 0)),
                    m3c::ContractViolation);
}
