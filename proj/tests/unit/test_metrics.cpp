#include "doctest.h"
#include "oracles.hpp"

#include "m3c/error.hpp"
#include "m3c/indicator.hpp"
#include "m3c/metrics.hpp"

using m3c::Assignment;
using m3c::ClusterDivision;

namespace {

const ClusterDivision kGt({0, 0, 1, 1});   // {12|34}
const ClusterDivision kPred({0, 0, 0, 1}); // {123|4}

} // namespace

TEST_CASE("purity examples")
{
    CHECK(m3c::clustering_purity(kGt, kGt) == 1.0);
    CHECK(m3c::clustering_purity(kPred, kGt) == doctest::Approx(0.75));
    CHECK(m3c::clustering_purity(ClusterDivision({0, 0, 0, 0}), kGt) == doctest::Approx(0.5));
}

TEST_CASE("rand index examples")
{
    CHECK(m3c::rand_index(kGt, kGt) == 1.0);
    CHECK(m3c::rand_index(kPred, kGt) == doctest::Approx(0.625));
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::size_t> singles(n);
        for (std::size_t i = 0; i < n; ++i)
            singles[i] = i;
        CHECK(m3c::rand_index(ClusterDivision(singles),
                              ClusterDivision(std::vector<std::size_t>(n, 0))) ==
              doctest::Approx(1.0 / static_cast<double>(n)));
    }
}

TEST_CASE("clustering accuracy examples")
{
    CHECK(m3c::clustering_accuracy(kGt, kGt) == 1.0);
    CHECK(m3c::clustering_accuracy(kPred, kGt) == doctest::Approx(0.25));
    // one predicted cluster over two balanced true clusters:
    // merge penalty = 8 cross ordered pairs * 1/(2*2) = 2, CA = 1 - 2/2 = 0
    CHECK(m3c::clustering_accuracy(ClusterDivision({0, 0, 0, 0}), kGt) == doctest::Approx(0.0));
    CHECK(oracle::clustering_accuracy({0, 0, 0, 0}, {0, 0, 1, 1}) == doctest::Approx(0.0));
    CHECK(oracle::clustering_accuracy({0, 0, 0, 1}, {0, 0, 1, 1}) == doctest::Approx(0.25));
}

TEST_CASE("cluster metrics equal the enumeration oracles on all partitions up to N = 6")
{
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto parts = oracle::all_partitions(n);
        for (const auto& p : parts)
            for (const auto& g : parts) {
                const ClusterDivision pred(p), gt(g);
                REQUIRE(m3c::clustering_purity(pred, gt) ==
                        doctest::Approx(oracle::purity(p, g)).epsilon(1e-12));
                REQUIRE(m3c::rand_index(pred, gt) ==
                        doctest::Approx(oracle::rand_index(p, g)).epsilon(1e-12));
                REQUIRE(m3c::clustering_accuracy(pred, gt) ==
                        doctest::Approx(oracle::clustering_accuracy(p, g)).epsilon(1e-12));
                ++pairs;
            }
    }
    CHECK(pairs == 1 + 4 + 25 + 225 + 2704 + 41209);
}

TEST_CASE("cluster metrics ignore label names")
{
    const auto parts = oracle::all_partitions(5);
    for (const auto& p : parts)
        for (const auto& g : parts) {
            auto relabel = p;
            const std::size_t k = *std::max_element(p.begin(), p.end()) + 1;
            for (auto& l : relabel)
                l = k - 1 - l;
            const ClusterDivision a(p), b(relabel), gt(g);
            REQUIRE(m3c::clustering_purity(a, gt) == m3c::clustering_purity(b, gt));
            REQUIRE(m3c::rand_index(a, gt) == m3c::rand_index(b, gt));
            REQUIRE(m3c::clustering_accuracy(a, gt) ==
                    doctest::Approx(m3c::clustering_accuracy(b, gt)));
        }
}

TEST_CASE("matching accuracy")
{
    // two graphs of 12 nodes; the first 10 are planted inliers, the rest outliers
    m3c::MatchingSet truth({12, 12});
    Assignment gt(12, 12);
    for (std::size_t v = 0; v < 10; ++v)
        gt.set(v, v);
    truth.set(0, 1, gt);
    const auto same = m3c::ClusterIndicator::complete(2);

    m3c::MatchingSet pred({12, 12});
    pred.set(0, 1, gt);
    auto exact = m3c::matching_accuracy(pred, truth, same);
    CHECK(exact.defined);
    CHECK(exact.value == 1.0);

    Assignment seven(12, 12);
    for (std::size_t v = 0; v < 7; ++v)
        seven.set(v, v);
    seven.set(7, 8);
    seven.set(8, 7);
    seven.set(9, 10);
    seven.set(10, 9);
    seven.set(11, 11);
    pred.set(0, 1, seven);
    CHECK(m3c::matching_accuracy(pred, truth, same).value == doctest::Approx(0.7));

    // outlier rows never count
    Assignment outliers_moved = gt;
    outliers_moved.set(10, 11);
    outliers_moved.set(11, 10);
    pred.set(0, 1, outliers_moved);
    CHECK(m3c::matching_accuracy(pred, truth, same).value == 1.0);

    // no intra-cluster pair: reported as undefined
    const auto none = m3c::matching_accuracy(pred, truth, m3c::ClusterIndicator(2));
    CHECK_FALSE(none.defined);
    CHECK(none.value == 0.0);
}

TEST_CASE("matching accuracy averages ordered intra-cluster pairs")
{
    // three graphs, clusters {0,1} and {2}
    m3c::MatchingSet truth({3, 3, 3});
    truth.set(0, 1, Assignment::identity(3));
    m3c::MatchingSet pred({3, 3, 3});
    pred.set(0, 1, Assignment(3, 3, {{0, 0}, {1, 2}, {2, 1}}));
    pred.set(0, 2, Assignment::identity(3));
    const auto same = m3c::division_to_indicator(ClusterDivision({0, 0, 1}));
    // (0,1): 1 of 3 rows right; (1,0): row 0 right, rows 1 and 2 swapped -> 1 of 3
    CHECK(m3c::matching_accuracy(pred, truth, same).value == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("metric inputs must agree in size")
{
    CHECK_THROWS_AS(m3c::rand_index(kGt, ClusterDivision({0, 1})), m3c::ContractViolation);
    CHECK_THROWS_AS(m3c::clustering_purity(ClusterDivision(), ClusterDivision()),
                    m3c::ContractViolation);
}
