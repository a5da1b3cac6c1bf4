#pragma once

#include <cstddef>
#include <vector>

namespace thinlab {

// Finite-support probability mass function on {0, 1, ..., n}.
//
// Weights are non-negative, sum to one within 1e-12 and carry no trailing
// zeros (interior zeros are kept, so delta_2 is stored as [0, 0, 1]).
// Instances are immutable after construction; all operations on them are
// pure functions and safe to use concurrently.
class Pmf {
public:
    // Normalizes the raw weights by their sum and trims trailing zeros.
    // Throws NegativeWeight if any entry is < 0, ZeroMass if they sum to 0.
    explicit Pmf(std::vector<double> raw_weights);

    // Point mass at k.
    static Pmf delta(std::size_t k);

    // Support length n+1 (index of the last positive weight, plus one).
    std::size_t size() const { return w_.size(); }

    // Mass at i; zero beyond the stored support.
    double operator[](std::size_t i) const { return i < w_.size() ? w_[i] : 0.0; }

    const std::vector<double>& weights() const { return w_; }

    bool operator==(const Pmf&) const = default;

private:
    std::vector<double> w_;
};

Pmf make_pmf(const std::vector<double>& raw_weights);

// (f*g)_i = sum_{k=0..i} f_k g_{i-k}.
Pmf convolve(const Pmf& f, const Pmf& g);

// f convolved with itself n times, by binary exponentiation.
// n = 0 returns the convolution identity delta_0.
Pmf n_fold_convolve(const Pmf& f, unsigned n);

// sum_i i f_i.
double mean(const Pmf& f);

// (1/2) sum_i |f_i - g_i| over the union of supports; lies in [0, 1].
double total_variation(const Pmf& f, const Pmf& g);

}  // namespace thinlab
