#pragma once

#include <cmath>
#include <vector>

#include "thinlab/pmf.hpp"

namespace thinlab::testing {

// Closed-form Binomial(n, p) weights; independent of bernoulli_sum so it
// can serve as an oracle for it. Requires p in (0, 1).
inline Pmf binomial_pmf(int n, double p) {
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    const double lg_n = std::lgamma(n + 1.0);
    for (int k = 0; k <= n; ++k) {
        w[static_cast<std::size_t>(k)] =
            std::exp(lg_n - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                     k * std::log(p) + (n - k) * std::log1p(-p));
    }
    return Pmf(std::move(w));
}

// Geometric(p) truncated at `cutoff` and renormalized; the ratio
// (i+1) f_{i+1} / f_i = (i+1)(1-p) increases, so this is never ULC
// once the support has three points.
inline Pmf geometric_pmf(double p, int cutoff) {
    std::vector<double> w(static_cast<std::size_t>(cutoff) + 1);
    for (int i = 0; i <= cutoff; ++i)
        w[static_cast<std::size_t>(i)] = p * std::pow(1.0 - p, i);
    return Pmf(std::move(w));
}

}  // namespace thinlab::testing
