#pragma once

#include <vector>

#include "thinlab/pmf.hpp"

namespace thinlab {

// Retention probability of the thinning map. Construction rejects values
// outside [0, 1]; implicit from double so call sites read thin(f, 0.3).
class ThinningFraction {
public:
    ThinningFraction(double value);  // NOLINT(google-explicit-constructor)
    double value() const { return v_; }

private:
    double v_;
};

// Binomial thinning: (T_a f)_i = sum_{j >= i} C(j,i) a^i (1-a)^(j-i) f_j.
// T_1 is the identity and T_0 collapses everything to delta_0, exactly.
Pmf thin(const Pmf& f, ThinningFraction alpha);

// d(T_a f)_i / da for i = 0..size-1, from the closed form
//   (i (T_a f)_i - (i+1) (T_a f)_{i+1}) / a.
// The entries sum to zero (mass conservation). Throws DegenerateAlpha at a = 0.
std::vector<double> thin_derivative(const Pmf& f, ThinningFraction alpha);

}  // namespace thinlab
