#pragma once

#include <cstddef>

#include "thinlab/pmf.hpp"

namespace thinlab {

// The decomposition H = -D - L against the Poisson of matching mean:
// d = D(f || po(rate)) and l = E log po(X; rate) with rate = EX.
// All entropies are in nats.
struct EntropyDecomposition {
    double h = 0;
    double d = 0;
    double l = 0;
    double rate = 0;
};

// sum_i -f_i log f_i, with 0 log 0 = 0.
double entropy(const Pmf& f);

// sum_i f_i log(f_i / g_i) over the support of f.
// Throws SupportViolation if f puts mass where g has none.
double relative_entropy(const Pmf& f, const Pmf& g);

// log po(i; rate) = i log(rate) - rate - log i!, evaluated in log space.
double log_poisson_pmf(std::size_t i, double rate);

// Po(rate) truncated where the discarded tail mass drops below tail_eps,
// then renormalized. rate = 0 gives delta_0. tail_eps must be in (0, 1e-6].
Pmf poisson_pmf(double rate, double tail_eps = 1e-15);

// h, d, l and the reference rate for f. delta_0 decomposes to all zeros.
// d is computed against the truncated Poisson via relative_entropy while
// l is evaluated analytically, so |h + d + l| <= 1e-10 is a real crosscheck.
EntropyDecomposition decompose(const Pmf& f);

// E(t) = H(po(t)) = t (1 - log t) + E log X!, strictly increasing and
// concave in t, with E(0) = 0. Evaluated on a tail < 1e-15 truncation.
double poisson_entropy(double t);

// Discrete entropy power V(f) = E^{-1}(H(f)); the Poisson rate whose
// entropy matches H(f), found by monotone bisection to width 1e-12.
double entropy_power(const Pmf& f);

}  // namespace thinlab
