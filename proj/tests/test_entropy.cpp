#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "thinlab/entropy.hpp"
#include "thinlab/errors.hpp"
#include "thinlab/random.hpp"
#include "thinlab/ulc.hpp"

using namespace thinlab;
using thinlab::testing::binomial_pmf;

TEST_CASE("entropy examples") {
    CHECK(entropy(Pmf::delta(3)) == 0.0);
    CHECK(entropy(make_pmf({1, 1, 1, 1})) == doctest::Approx(std::log(4.0)).epsilon(1e-14));
    const double expected = (1.0 / 3.0) * std::log(6.0) + (2.0 / 3.0) * std::log(1.5);
    CHECK(entropy(make_pmf({1, 4, 1})) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("relative entropy examples") {
    const Pmf coin({0.5, 0.5});
    CHECK(relative_entropy(coin, coin) == 0.0);
    CHECK(relative_entropy(coin, Pmf({0.75, 0.25})) ==
          doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(relative_entropy(Pmf::delta(1), Pmf::delta(0)), SupportViolation);
}

TEST_CASE("Gibbs inequality on random pairs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Pmf f = random_ulc(6, rng());
        // Reference with full support so support(f) is covered.
        std::vector<double> gw(f.size());
        for (double& x : gw) x = uniform01(rng) + 0.05;
        const Pmf g(std::move(gw));
        CHECK(relative_entropy(f, g) >= -1e-12);
    }
}

TEST_CASE("poisson_pmf truncation") {
    CHECK(poisson_pmf(0.0) == Pmf::delta(0));
    CHECK(poisson_pmf(1.0)[0] == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(std::abs(mean(poisson_pmf(3.0)) - 3.0) <= 1e-9);
    CHECK_THROWS_AS(poisson_pmf(-1.0), DomainError);
    CHECK_THROWS_AS(poisson_pmf(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(poisson_pmf(1.0, 1e-3), DomainError);  // tail_eps must be <= 1e-6
}

TEST_CASE("decompose analytic cases") {
    // Poisson decomposes with d = 0 up to truncation.
    CHECK(decompose(poisson_pmf(2.0)).d < 1e-8);

    // Single atom: l = log po(1;1) = -1, d = 1, h = 0.
    const auto one = decompose(Pmf::delta(1));
    CHECK(one.h == 0.0);
    CHECK(one.l == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(one.d == doctest::Approx(1.0).epsilon(1e-10));

    const auto zero = decompose(Pmf::delta(0));
    CHECK(zero.h == 0.0);
    CHECK(zero.d == 0.0);
    CHECK(zero.l == 0.0);
    CHECK(zero.rate == 0.0);
}

TEST_CASE("decompose agrees with independent summation") {
    // Oracle: all three series summed directly with explicit factorials.
    const Pmf f = binomial_pmf(4, 0.5);
    const double lambda = mean(f);
    double h = 0.0;
    double l = 0.0;
    double factorial = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) factorial *= static_cast<double>(i);
        if (f[i] == 0.0) continue;
        h -= f[i] * std::log(f[i]);
        const double poi = std::pow(lambda, static_cast<double>(i)) * std::exp(-lambda) / factorial;
        l += f[i] * std::log(poi);
    }
    double d = 0.0;
    factorial = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) factorial *= static_cast<double>(i);
        if (f[i] == 0.0) continue;
        const double poi = std::pow(lambda, static_cast<double>(i)) * std::exp(-lambda) / factorial;
        d += f[i] * std::log(f[i] / poi);
    }
    const auto dec = decompose(f);
    CHECK(dec.h == doctest::Approx(h).epsilon(1e-12));
    CHECK(dec.l == doctest::Approx(l).epsilon(1e-12));
    CHECK(dec.d == doctest::Approx(d).epsilon(1e-9));
    CHECK(std::abs(dec.h + dec.d + dec.l) <= 1e-10);
}

TEST_CASE("decomposition identity over a random corpus") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Pmf f = random_ulc(8, rng());
        if (mean(f) == 0.0) continue;
        const auto dec = decompose(f);
        CHECK(std::abs(dec.h + dec.d + dec.l) <= 1e-10);
        CHECK(dec.d >= -1e-12);
    }
    // Works for pmfs with support gaps too (Poisson reference is extended).
    const auto gap = decompose(make_pmf({1.0, 0, 0, 0, 1.0}));
    CHECK(std::abs(gap.h + gap.d + gap.l) <= 1e-10);
}

TEST_CASE("poisson_entropy") {
    CHECK(poisson_entropy(0.0) == 0.0);
    CHECK(poisson_entropy(1.0) ==
          doctest::Approx(entropy(poisson_pmf(1.0))).epsilon(1e-9));
    CHECK(poisson_entropy(5.0) > poisson_entropy(2.0));

    // Increasing and concave on a short grid (the full 0.1..20 grid runs
    // in the acceptance suite).
    double prev = poisson_entropy(0.1);
    double prev_diff = 0.0;
    bool first = true;
    for (int k = 2; k <= 50; ++k) {
        const double cur = poisson_entropy(0.1 * k);
        const double diff = cur - prev;
        CHECK(diff > 0.0);
        if (!first) CHECK(diff - prev_diff <= 1e-10);
        prev = cur;
        prev_diff = diff;
        first = false;
    }
}

TEST_CASE("entropy_power") {
    CHECK(entropy_power(Pmf::delta(5)) == 0.0);
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(std::abs(entropy_power(poisson_pmf(lambda)) - lambda) <= 1e-6);
    }
    // Frozen from an independent bisection against poisson_entropy.
    CHECK(entropy_power(make_pmf({1, 4, 1})) ==
          doctest::Approx(0.4427953692479605).epsilon(1e-9));
}

TEST_CASE("entropy_power round trip and Poisson maximum entropy") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const Pmf f = random_ulc(8, rng());
        CHECK(std::abs(poisson_entropy(entropy_power(f)) - entropy(f)) <= 1e-8);
        // Among ULC pmfs of a given mean the Poisson has maximum entropy.
        CHECK(entropy(f) <= poisson_entropy(mean(f)) + 1e-9);
        CHECK(entropy_power(f) <= mean(f) + 1e-6);
    }
}
