#include <limits>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "thinlab/entropy.hpp"
#include "thinlab/errors.hpp"
#include "thinlab/random.hpp"
#include "thinlab/ulc.hpp"

using namespace thinlab;
using thinlab::testing::binomial_pmf;
using thinlab::testing::geometric_pmf;

TEST_CASE("is_ulc classifies the classic families") {
    CHECK(is_ulc(binomial_pmf(5, 0.4)));
    CHECK(is_ulc(make_pmf({1, 4, 1})));
    CHECK(is_ulc(poisson_pmf(2.0)));            // equality boundary case
    CHECK(is_ulc(Pmf::delta(3)));               // single atom
    CHECK_FALSE(is_ulc(geometric_pmf(0.5, 20)));
    CHECK_FALSE(is_ulc(make_pmf({0.5, 0.0, 0.5})));  // support gap
}

TEST_CASE("is_ulc agrees with the ratio characterization") {
    // Oracle: (i+1) f_{i+1} / f_i must be non-increasing for ULC pmfs.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Pmf f = random_ulc(8, rng());
        REQUIRE(is_ulc(f));
        const auto& w = f.weights();
        std::size_t first = 0;
        while (w[first] == 0.0) ++first;
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t i = first; i + 1 < w.size(); ++i) {
            const double ratio = static_cast<double>(i + 1) * w[i + 1] / w[i];
            CHECK(ratio <= prev * (1.0 + 1e-9));
            prev = ratio;
        }
    }
    // And for the truncated geometric it is strictly increasing.
    const Pmf geo = geometric_pmf(0.5, 20);
    const auto& g = geo.weights();
    for (std::size_t i = 0; i + 2 < g.size(); ++i) {
        CHECK(static_cast<double>(i + 2) * g[i + 2] / g[i + 1] >
              static_cast<double>(i + 1) * g[i + 1] / g[i]);
    }
}

TEST_CASE("bernoulli_sum") {
    const Pmf one = bernoulli_sum(BernoulliSumSpec({0.3}));
    CHECK(one[0] == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(one[1] == doctest::Approx(0.3).epsilon(1e-15));

    const Pmf two = bernoulli_sum(BernoulliSumSpec({0.5, 0.5}));
    CHECK(two[1] == doctest::Approx(0.5).epsilon(1e-14));

    CHECK(total_variation(bernoulli_sum(BernoulliSumSpec(std::vector<double>(6, 0.3))),
                          binomial_pmf(6, 0.3)) < 1e-12);

    CHECK(bernoulli_sum(BernoulliSumSpec({1.0, 1.0})) == Pmf::delta(2));
    CHECK_THROWS_AS(BernoulliSumSpec({}), DomainError);
    CHECK_THROWS_AS(BernoulliSumSpec({0.5, 1.5}), DomainError);
}

TEST_CASE("random_ulc is deterministic and ULC") {
    CHECK(random_ulc(8, 42) == random_ulc(8, 42));
    std::uint64_t seed = 0;
    for (int k = 0; k < 1000; ++k) {
        const Pmf f = random_ulc(8, seed++);
        CHECK(is_ulc(f));
        CHECK(mean(f) <= 8.0);
    }
}

TEST_CASE("ULC closed under convolution") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Pmf f = random_ulc(6, rng());
        const Pmf g = random_ulc(6, rng());
        CHECK(is_ulc(convolve(f, g)));
    }
}
