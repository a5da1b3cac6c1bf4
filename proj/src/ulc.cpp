#include "thinlab/ulc.hpp"

#include <random>

#include "thinlab/errors.hpp"
#include "thinlab/random.hpp"

namespace thinlab {

BernoulliSumSpec::BernoulliSumSpec(std::vector<double> parameters)
    : params(std::move(parameters)) {
    if (params.empty()) throw DomainError("bernoulli sum: needs at least one parameter");
    for (double p : params) {
        if (!(p >= 0.0 && p <= 1.0))
            throw DomainError("bernoulli sum: parameter outside [0, 1]");
    }
}

bool is_ulc(const Pmf& f) {
    const auto& w = f.weights();
    std::size_t first = 0;
    while (w[first] == 0.0) ++first;  // trailing zeros are trimmed, so this terminates
    const std::size_t last = w.size() - 1;
    for (std::size_t i = first; i <= last; ++i) {
        if (w[i] == 0.0) return false;  // interior zero: support not contiguous
    }
    // i! f_i log-concave <=> i f_i^2 >= (i+1) f_{i-1} f_{i+1}; the slack
    // absorbs rounding from convolution chains, equality (Poisson) passes.
    constexpr double kSlack = 1e-12;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double lhs = static_cast<double>(i) * w[i] * w[i];
        const double rhs = static_cast<double>(i + 1) * w[i - 1] * w[i + 1];
        if (lhs < rhs * (1.0 - kSlack)) return false;
    }
    return true;
}

Pmf bernoulli_sum(const BernoulliSumSpec& spec) {
    Pmf result = Pmf::delta(0);
    for (double p : spec.params) result = convolve(result, Pmf({1.0 - p, p}));
    return result;
}

Pmf random_ulc(int max_n, std::uint64_t seed) {
    if (max_n < 1) throw DomainError("random_ulc: max_n must be >= 1");
    std::mt19937_64 rng(seed);
    const int n = uniform_int(rng, 1, max_n);
    std::vector<double> params(static_cast<std::size_t>(n));
    for (double& p : params) p = uniform01(rng);
    Pmf f = bernoulli_sum(BernoulliSumSpec(params));
    if (uniform01(rng) < 0.5) f = thin(f, uniform_real(rng, 0.1, 1.0));
    return f;
}

}  // namespace thinlab
