#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "thinlab/entropy.hpp"
#include "thinlab/errors.hpp"
#include "thinlab/explorer.hpp"
#include "thinlab/ulc.hpp"

using namespace thinlab;
using thinlab::testing::binomial_pmf;

TEST_CASE("parse_fixture") {
    CHECK(total_variation(parse_fixture("counterexample"), make_pmf({1, 4, 1})) <= 1e-15);
    CHECK(parse_fixture("fair-coin") == Pmf({0.5, 0.5}));
    CHECK(total_variation(parse_fixture("binomial:6,0.5"), binomial_pmf(6, 0.5)) < 1e-12);
    CHECK(total_variation(parse_fixture("poisson:2"), poisson_pmf(2.0)) <= 1e-15);
    CHECK_FALSE(is_ulc(parse_fixture("geometric:0.5,20")));
    CHECK(parse_fixture("bernoulli:0.7,0.3") ==
          bernoulli_sum(BernoulliSumSpec({0.7, 0.3})));

    for (const char* bad : {"nope", "binomial:0,0.5", "binomial:4", "poisson:-1",
                            "geometric:1.5,10", "bernoulli:", "binomial:4,x"}) {
        CHECK_THROWS_AS(parse_fixture(bad), ConfigError);
    }
}

TEST_CASE("config validation") {
    RunConfig config;
    config.corpus_size = 0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.corpus_size = 10;
    config.alpha_grid = 2;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.alpha_grid = 33;
    config.validate();
    CHECK(config.tolerance("prop1", 1e-9) == 1e-9);
    config.tolerance_overrides["prop1"] = 1e-6;
    CHECK(config.tolerance("prop1", 1e-9) == 1e-6);
}

TEST_CASE("run_verify passes and is deterministic") {
    RunConfig config;
    config.seed = 1;
    config.corpus_size = 8;
    const auto first = run_verify(config);
    CHECK(first.all_theorems_pass);
    CHECK_FALSE(first.rows.empty());
    for (const auto& row : first.rows) {
        if (!row.conjecture_flag) CHECK(row.pass);
    }
    const auto second = run_verify(config);
    CHECK(first.rows == second.rows);

    // Extra fixtures join the corpus.
    config.fixtures.push_back("bernoulli:0.9,0.1");
    const auto extended = run_verify(config);
    CHECK(extended.rows.size() > first.rows.size());

    // A hostile tolerance override flips theorem rows to failing.
    config.tolerance_overrides["concavity_thm2"] = -1.0;
    CHECK_FALSE(run_verify(config).all_theorems_pass);
}

TEST_CASE("run_sweep on the Poisson equality case") {
    RunConfig config;
    config.alpha_grid = 9;
    const Pmf po = parse_fixture("poisson:2");
    const auto rows = run_sweep(config, po, po);
    REQUIRE(rows.size() == 9);
    CHECK(rows.front().alpha == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(rows.back().alpha == doctest::Approx(1.0 - 1e-3).epsilon(1e-12));
    for (const auto& row : rows) {
        CHECK(std::abs(row.v_slack) <= 1e-6);      // V slack vanishes for Poisson pairs
        CHECK(std::abs(row.h_slack) <= 1e-9);      // and so does the entropy slack
        CHECK(std::abs(row.fd_second) <= 1e-6);    // l(alpha) is constant
        CHECK(std::abs(row.closed_second) <= 1e-8);
    }
    const auto csv = emit_sweep(rows, ReportFormat::csv);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "alpha,h_slack,v_slack,l_value,fd_second,closed_second");
}

TEST_CASE("run_sweep derivative columns agree") {
    RunConfig config;
    config.alpha_grid = 33;
    const auto rows = run_sweep(config, binomial_pmf(4, 0.6), binomial_pmf(5, 0.2));
    for (const auto& row : rows) {
        if (row.alpha < 0.01 || row.alpha > 0.99) continue;  // smooth interior points
        CHECK(std::abs(row.fd_second - row.closed_second) / (1.0 + std::abs(row.closed_second)) <
              1e-4);
    }
}

TEST_CASE("run_search is deterministic and finds no violations") {
    RunConfig config;
    config.seed = 7;
    config.budget = 300;
    config.max_support = 2;
    config.alpha_grid = 9;
    const auto first = run_search(config, SearchTarget::shepp_olkin);
    const auto second = run_search(config, SearchTarget::shepp_olkin);
    CHECK(first.min_slack == second.min_slack);
    CHECK(first.argmin == second.argmin);
    CHECK(first.evaluations == second.evaluations);
    CHECK(first.evaluations <= config.budget);
    CHECK(first.min_slack >= -1e-9);
    CHECK_FALSE(first.flagged);
    CHECK(first.rows.back().check_name == "search_min_slack");

    config.budget = 120;
    const auto rtepi = run_search(config, SearchTarget::rtepi);
    CHECK(rtepi.min_slack >= -1e-6);

    CHECK_THROWS_AS(parse_search_target("bogus"), ConfigError);
}

TEST_CASE("run_repro reproduces the reference instances") {
    RunConfig config;
    const auto result = run_repro(config);
    bool saw_counterexample = false;
    for (const auto& row : result.rows) {
        CHECK(row.pass);
        if (row.check_name == "naive_epi_counterexample") {
            saw_counterexample = true;
            CHECK(row.slack < -1e-6);
        }
    }
    CHECK(saw_counterexample);
    CHECK(result.summary.find("violation confirmed") != std::string::npos);
    CHECK(result.summary.find("concave") != std::string::npos);
}
