#include "thinlab/entropy.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "thinlab/errors.hpp"

namespace thinlab {

double entropy(const Pmf& f) {
    double h = 0.0;
    for (double w : f.weights()) {
        if (w > 0.0) h -= w * std::log(w);
    }
    return h;
}

double relative_entropy(const Pmf& f, const Pmf& g) {
    double d = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double fi = f[i];
        if (fi == 0.0) continue;
        const double gi = g[i];
        if (gi <= 0.0)
            throw SupportViolation("relative_entropy: f has mass outside the support of g");
        d += fi * std::log(fi / gi);
    }
    return d;
}

double log_poisson_pmf(std::size_t i, double rate) {
    const double di = static_cast<double>(i);
    if (rate == 0.0) return i == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return di * std::log(rate) - rate - std::lgamma(di + 1.0);
}

namespace {

// Truncated Poisson weights. Past i >= 2*rate + 2 the term ratio is below
// 1/2, so the discarded tail is at most twice the next term; cutting once
// the current term drops under tail_eps/4 leaves tail mass < tail_eps.
// (A cumulative-mass stop rule can stall on accumulated rounding.)
std::vector<double> poisson_weights(double rate, double tail_eps, std::size_t min_len) {
    std::vector<double> w;
    for (std::size_t i = 0;; ++i) {
        const double term = std::exp(log_poisson_pmf(i, rate));
        w.push_back(term);
        if (static_cast<double>(i) >= 2.0 * rate + 2.0 && w.size() >= min_len &&
            term <= 0.25 * tail_eps)
            break;
    }
    return w;
}

}  // namespace

Pmf poisson_pmf(double rate, double tail_eps) {
    if (rate < 0.0) throw DomainError("poisson_pmf: rate must be >= 0");
    if (!(tail_eps > 0.0 && tail_eps <= 1e-6))
        throw DomainError("poisson_pmf: tail_eps must lie in (0, 1e-6]");
    if (rate == 0.0) return Pmf::delta(0);
    return Pmf(poisson_weights(rate, tail_eps, 1));
}

EntropyDecomposition decompose(const Pmf& f) {
    EntropyDecomposition out;
    out.rate = mean(f);
    if (out.rate == 0.0) return out;  // delta_0: h = d = l = 0
    out.h = entropy(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > 0.0) out.l += f[i] * log_poisson_pmf(i, out.rate);
    }
    // The reference must cover the support of f, not just the central mass.
    const Pmf reference(poisson_weights(out.rate, 1e-15, f.size()));
    out.d = relative_entropy(f, reference);
    return out;
}

double poisson_entropy(double t) {
    if (t < 0.0) throw DomainError("poisson_entropy: t must be >= 0");
    if (t == 0.0) return 0.0;
    // H(po(t)) = t (1 - log t) + sum_i po(i; t) log i!, truncated with the
    // same term-based tail rule as poisson_weights.
    double expected_log_factorial = 0.0;
    for (std::size_t i = 0;; ++i) {
        const double p = std::exp(log_poisson_pmf(i, t));
        expected_log_factorial += p * std::lgamma(static_cast<double>(i) + 1.0);
        if (static_cast<double>(i) >= 2.0 * t + 2.0 && p <= 0.25e-15) break;
    }
    return t * (1.0 - std::log(t)) + expected_log_factorial;
}

double entropy_power(const Pmf& f) {
    const double h = entropy(f);
    if (h <= 0.0) return 0.0;
    double lo = 0.0;
    double hi = 1.0;
    while (poisson_entropy(hi) < h) hi *= 2.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (poisson_entropy(mid) < h)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace thinlab
