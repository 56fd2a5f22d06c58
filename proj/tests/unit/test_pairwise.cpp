#include "doctest.h"
#include "oracles.hpp"

#include "m3c/affinity.hpp"
#include "m3c/delaunay.hpp"
#include "m3c/error.hpp"
#include "m3c/pairwise.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using m3c::AffinityMatrix;
using m3c::Assignment;
using m3c::Matrix;
using m3c::PointGraph;

namespace {

double total(const Matrix& s, const Assignment& x)
{
    double t = 0.0;
    for (const auto& [r, c] : x.matches())
        t += s(r, c);
    return t;
}

std::vector<m3c::Point> random_points(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<m3c::Point> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({u(rng), u(rng)});
    return pts;
}

} // namespace

TEST_CASE("hungarian examples")
{
    Matrix id(2, 2);
    id(0, 0) = id(1, 1) = 1.0;
    CHECK(m3c::hungarian(id) == Assignment::identity(2));

    Matrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 3;
    s(1, 1) = 1;
    const auto x = m3c::hungarian(s);
    CHECK(x == Assignment(2, 2, {{0, 1}, {1, 0}}));
    CHECK(total(s, x) == 5.0);
}

TEST_CASE("hungarian equals exhaustive search on random matrices")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> shape(1, 6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> small_int(0, 9);
    for (int trial = 0; trial < 1500; ++trial) {
        const auto rows = static_cast<std::size_t>(shape(rng));
        const auto cols = static_cast<std::size_t>(shape(rng));
        Matrix s(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                s(r, c) = trial % 3 == 0 ? small_int(rng) : u(rng);
        const auto x = m3c::hungarian(s);
        REQUIRE(validate(x));
        REQUIRE(x.match_count() == std::min(rows, cols));
        REQUIRE(total(s, x) == doctest::Approx(oracle::best_assignment_value(s)));
    }
}

TEST_CASE("rrwm on an all-zero affinity stays uniform")
{
    const std::vector<m3c::Edge> e{{0, 1}, {1, 2}};
    const AffinityMatrix k(Matrix(3, 3), e, e, Matrix(2, 2));
    const auto soft = m3c::rrwm(k);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(soft(r, c) == doctest::Approx(1.0 / 9.0));
    const auto x = m3c::hungarian(soft);
    CHECK(validate(x));
    CHECK(k.score(x) == 0.0);
}

TEST_CASE("rrwm with an identity-like node affinity prefers the identity")
{
    Matrix node(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            node(i, j) = i == j ? 1.0 : 0.1;
    const AffinityMatrix k(node, {}, {}, Matrix(0, 0));
    const auto soft = m3c::rrwm(k);
    for (std::size_t r = 0; r < 4; ++r) {
        std::size_t arg = 0;
        for (std::size_t c = 1; c < 4; ++c)
            if (soft(r, c) > soft(r, arg))
                arg = c;
        CHECK(arg == r);
    }
    double mass = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            mass += soft(r, c);
    CHECK(mass == doctest::Approx(1.0));
}

TEST_CASE("isomorphic noiseless 4-node pairs reach the brute-force optimum")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = random_points(rng, 4);
        std::vector<std::size_t> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<m3c::Point> pts2(4);
        for (std::size_t v = 0; v < 4; ++v)
            pts2[v] = pts[perm[v]];
        const PointGraph g1("a", pts, m3c::delaunay(pts));
        const PointGraph g2("b", pts2, m3c::delaunay(pts2));
        const auto k = m3c::build_raw_affinity(g1, g2, 0.9, 0.03);
        const auto x = m3c::solve_pairwise(g1, g2, k);
        CHECK(k.score(x) == doctest::Approx(oracle::best_qap_value(k)));
    }
}

TEST_CASE("solve_pairwise trivial and planted cases")
{
    const PointGraph one("a", {{0.5, 0.5}}, {});
    const auto k1 = m3c::build_raw_affinity(one, one, 0.9, 0.03);
    CHECK(m3c::solve_pairwise(one, one, k1) == Assignment::identity(1));

    std::mt19937_64 rng(5);
    const auto pts = random_points(rng, 8);
    const PointGraph g("g", pts, m3c::delaunay(pts));
    const auto k = m3c::build_raw_affinity(g, g, 0.9, 0.03);
    CHECK(m3c::solve_pairwise(g, g, k) == Assignment::identity(8));
}

TEST_CASE("rrwm parameters are validated")
{
    m3c::RrwmParams p;
    p.jump_prob = 1.5;
    CHECK_THROWS_AS(p.validate(), m3c::ConfigError);
    p = {};
    p.max_iters = 0;
    CHECK_THROWS_AS(p.validate(), m3c::ConfigError);
}
