#include "doctest.h"

#include "m3c/error.hpp"
#include "m3c/experiment.hpp"

#include "json.hpp"

using m3c::Dataset;
using m3c::SolverConfig;

namespace {

Dataset small_synth(std::uint64_t seed)
{
    m3c::SynthConfig sc;
    sc.n_classes = 2;
    sc.graphs_per_class = {3};
    sc.n_inliers = 7;
    sc.n_outliers = 1;
    sc.deform_sigma = 0.02;
    sc.seed = seed;
    return Dataset::from_synth(sc);
}

SolverConfig two_clusters()
{
    SolverConfig cfg;
    cfg.n_clusters = 2;
    return cfg;
}

} // namespace

TEST_CASE("one repeat gives one result")
{
    const auto res = m3c::run_experiment(small_synth(1), two_clusters(), 1);
    REQUIRE(res.size() == 1);
    CHECK(res[0].metrics.ma.has_value());
    CHECK(res[0].metrics.ca.has_value());
    CHECK(res[0].instance_seed == 1u);
    CHECK(res[0].solver_seed == 0u);
}

TEST_CASE("repeats resample instances and shift the solver seed")
{
    auto cfg = two_clusters();
    cfg.seed = 10;
    const auto res = m3c::run_experiment(small_synth(5), cfg, 3);
    REQUIRE(res.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(res[r].instance_seed == 5 + r);
        CHECK(res[r].solver_seed == 10 + r);
    }
    const auto single = m3c::run_experiment(small_synth(7), cfg, 1);
    const auto shifted = m3c::run_experiment(small_synth(5), cfg, 3);
    CHECK(shifted[2].matchings == single[0].matchings);
}

TEST_CASE("summary means are plain arithmetic means")
{
    const auto res = m3c::run_experiment(small_synth(2), two_clusters(), 4);
    const auto s = m3c::summarize(res);
    double ma = 0.0, ri = 0.0;
    for (const auto& r : res) {
        ma += *r.metrics.ma;
        ri += *r.metrics.ri;
    }
    REQUIRE(s.ma.has_value());
    CHECK(s.ma->mean == doctest::Approx(ma / 4));
    CHECK(s.ri->mean == doctest::Approx(ri / 4));
    CHECK(s.ma->count == 4);
}

TEST_CASE("same seeds give byte-identical JSON")
{
    const auto data = small_synth(3);
    const auto a = m3c::results_to_json(m3c::run_experiment(data, two_clusters(), 2), two_clusters());
    const auto b = m3c::results_to_json(m3c::run_experiment(data, two_clusters(), 2), two_clusters());
    CHECK(a == b);
    CHECK(a.find("\"seconds\"") == std::string::npos);

    m3c::ResultsOptions timed;
    timed.include_timing = true;
    const auto t =
        m3c::results_to_json(m3c::run_experiment(data, two_clusters(), 1), two_clusters(), timed);
    CHECK(t.find("\"seconds\"") != std::string::npos);
}

TEST_CASE("results JSON records the configuration and the pair score normalisation")
{
    const auto json = nlohmann::json::parse(
        m3c::results_to_json(m3c::run_experiment(small_synth(3), two_clusters(), 1), two_clusters()));
    CHECK(json["version"] == 1);
    CHECK(json["config"]["scheme"] == "fuse");
    CHECK(json["config"]["r"] == "auto");
    CHECK(json["pair_score_normalization"] == "min(n_i, n_j)");
    CHECK(json["runs"][0]["trace"][0]["iteration"] == 0);
}

TEST_CASE("stored predictions evaluate to the recorded metrics")
{
    const auto data = small_synth(8);
    const auto res = m3c::run_experiment(data, two_clusters(), 2);
    const auto loaded = m3c::parse_results(m3c::results_to_json(res, two_clusters()));
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].division == res[0].division);
    CHECK(loaded[1].matchings == res[1].matchings);
    const auto m = m3c::evaluate(loaded[0].matchings, loaded[0].division, data);
    CHECK(m.ma == res[0].metrics.ma);
    CHECK(m.ca == res[0].metrics.ca);

    CHECK_THROWS_AS(m3c::parse_results("[]"), m3c::ParseError);
    CHECK_THROWS_AS(m3c::parse_results(R"({"version": 2, "runs": []})"), m3c::VersionError);
}

TEST_CASE("datasets without ground truth report metrics as unavailable")
{
    auto data = small_synth(1);
    std::vector<m3c::PointGraph> bare;
    for (const auto& g : data.graphs)
        bare.emplace_back(g.id(), g.points(), g.edges());
    Dataset plain;
    plain.graphs = bare;
    const auto res = m3c::run_experiment(plain, two_clusters(), 2);
    CHECK_FALSE(res[0].metrics.ma.has_value());
    CHECK_FALSE(res[0].metrics.ca.has_value());
    CHECK_FALSE(res[1].instance_seed.has_value());
    CHECK(res[0].matchings == res[1].matchings);
    const auto csv = m3c::results_to_csv(res);
    CHECK(csv.rfind("repeat,instance_seed,solver_seed,ma,cp,ri,ca,seconds,iterations\n", 0) == 0);
    CHECK(csv.find("\n0,,0,,,,,") != std::string::npos);
}

TEST_CASE("trace CSV has one row per iteration record")
{
    const auto res = m3c::run_experiment(small_synth(4), two_clusters(), 2);
    const auto csv = m3c::trace_to_csv(res, false);
    std::size_t lines = 0;
    for (char ch : csv)
        lines += ch == '\n' ? 1 : 0;
    CHECK(lines == 1 + res[0].trace.records.size() + res[1].trace.records.size());
}
