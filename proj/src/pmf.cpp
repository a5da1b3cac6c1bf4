#include "thinlab/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thinlab/errors.hpp"

namespace thinlab {

Pmf::Pmf(std::vector<double> raw_weights) : w_(std::move(raw_weights)) {
    if (w_.empty()) throw ZeroMass("pmf: no weights");
    for (double w : w_) {
        if (std::isnan(w) || w < 0.0) throw NegativeWeight("pmf: negative weight");
    }
    const double total = std::accumulate(w_.begin(), w_.end(), 0.0);
    if (total <= 0.0) throw ZeroMass("pmf: weights sum to zero");
    for (double& w : w_) w /= total;
    std::size_t n = w_.size();
    while (n > 1 && w_[n - 1] == 0.0) --n;
    w_.resize(n);
}

Pmf Pmf::delta(std::size_t k) {
    std::vector<double> w(k + 1, 0.0);
    w[k] = 1.0;
    return Pmf(std::move(w));
}

Pmf make_pmf(const std::vector<double>& raw_weights) { return Pmf(raw_weights); }

Pmf convolve(const Pmf& f, const Pmf& g) {
    const auto& a = f.weights();
    const auto& b = g.weights();
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return Pmf(std::move(out));
}

Pmf n_fold_convolve(const Pmf& f, unsigned n) {
    Pmf result = Pmf::delta(0);
    Pmf base = f;
    while (n > 0) {
        if (n & 1u) result = convolve(result, base);
        n >>= 1u;
        if (n > 0) base = convolve(base, base);
    }
    return result;
}

double mean(const Pmf& f) {
    const auto& w = f.weights();
    double m = 0.0;
    for (std::size_t i = 1; i < w.size(); ++i) m += static_cast<double>(i) * w[i];
    return m;
}

double total_variation(const Pmf& f, const Pmf& g) {
    const std::size_t n = std::max(f.size(), g.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::abs(f[i] - g[i]);
    return 0.5 * sum;
}

}  // namespace thinlab
