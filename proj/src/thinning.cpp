#include "thinlab/thinning.hpp"

#include <cmath>

#include "thinlab/errors.hpp"

namespace thinlab {

ThinningFraction::ThinningFraction(double value) : v_(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw DomainError("thinning fraction must lie in [0, 1]");
}

namespace {

// Binomial row bi(i; j, a) for i = 0..j via the recurrence
//   bi(i) = bi(i-1) * ((j-i+1)/i) * (a/(1-a)),  bi(0) = (1-a)^j,
// which avoids factorial overflow. If the seed underflows (huge support
// with a close to 1) the row is evaluated in log space instead.
void binomial_row(std::size_t j, double a, std::vector<double>& row) {
    row.resize(j + 1);
    const double seed = std::exp(static_cast<double>(j) * std::log1p(-a));
    if (seed > 0.0) {
        const double ratio = a / (1.0 - a);
        row[0] = seed;
        for (std::size_t i = 1; i <= j; ++i)
            row[i] = row[i - 1] * (static_cast<double>(j - i + 1) / static_cast<double>(i)) * ratio;
    } else {
        const double log_a = std::log(a);
        const double log_1ma = std::log1p(-a);
        const double lg_j = std::lgamma(static_cast<double>(j) + 1.0);
        for (std::size_t i = 0; i <= j; ++i) {
            const double di = static_cast<double>(i);
            const double dj = static_cast<double>(j);
            row[i] = std::exp(lg_j - std::lgamma(di + 1.0) - std::lgamma(dj - di + 1.0) +
                              di * log_a + (dj - di) * log_1ma);
        }
    }
}

}  // namespace

Pmf thin(const Pmf& f, ThinningFraction alpha) {
    const double a = alpha.value();
    if (a == 0.0) return Pmf::delta(0);
    if (a == 1.0) return f;
    const auto& w = f.weights();
    std::vector<double> out(w.size(), 0.0);
    std::vector<double> row;
    out[0] = w[0];
    for (std::size_t j = 1; j < w.size(); ++j) {
        if (w[j] == 0.0) continue;
        binomial_row(j, a, row);
        for (std::size_t i = 0; i <= j; ++i) out[i] += w[j] * row[i];
    }
    return Pmf(std::move(out));
}

std::vector<double> thin_derivative(const Pmf& f, ThinningFraction alpha) {
    const double a = alpha.value();
    if (a == 0.0) throw DegenerateAlpha("thin_derivative: alpha = 0");
    const Pmf tf = thin(f, alpha);
    std::vector<double> deriv(tf.size());
    for (std::size_t i = 0; i < tf.size(); ++i) {
        const double next = i + 1 < tf.size() ? tf[i + 1] : 0.0;
        deriv[i] = (static_cast<double>(i) * tf[i] - static_cast<double>(i + 1) * next) / a;
    }
    return deriv;
}

}  // namespace thinlab
