#pragma once

#include <cstdint>
#include <vector>

#include "thinlab/pmf.hpp"
#include "thinlab/thinning.hpp"

namespace thinlab {

// Parameters (a_1, ..., a_n) of a sum of independent Bernoulli(a_i)
// variables. Every entry must lie in [0, 1] and n >= 1.
struct BernoulliSumSpec {
    explicit BernoulliSumSpec(std::vector<double> parameters);
    std::vector<double> params;
};

// Ultra-log-concavity: the sequence i! f_i is log-concave, equivalently
// (i+1) f_{i+1} / f_i is non-increasing over the support. Requires the
// support to be a contiguous interval; pmfs with interior zeros classify
// as not ULC. Equality cases (Poisson) classify as ULC.
bool is_ulc(const Pmf& f);

// Pmf of sum X_i by iterated convolution with [1 - a_i, a_i].
Pmf bernoulli_sum(const BernoulliSumSpec& spec);

// Deterministic random ULC instance: a Bernoulli sum of length uniform in
// 1..max_n with i.i.d. uniform parameters, post-thinned by a random
// fraction half the time. Same (max_n, seed) always yields the same pmf.
Pmf random_ulc(int max_n, std::uint64_t seed);

}  // namespace thinlab
