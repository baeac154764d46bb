#pragma once

#include <functional>

namespace hyperint::series {

struct SumResult {
    double value;
    double est_error; // absolute
    int n_terms;
};

// sum_{n>=0} (-1)^n c(n) for smooth c, via the Euler transformation applied
// from n = 0. Handles conditionally convergent tails and polynomially growing
// terms (the transform regularizes them); the estimate returned is the
// magnitude of the smallest transformed term, the classic asymptotic-series
// truncation point.
SumResult euler_alternating_sum(const std::function<double(int)>& c, double tol, int max_depth = 200);

// sum_{n>=0} c(n) for smooth positive-decay c with c(n) ~ A n^{-lambda},
// lambda > 1, expandable in integer powers of 1/n. Direct partial sums at
// geometric checkpoints, then Richardson elimination of the known tail
// exponent ladder N^{1-lambda}, N^{-lambda}, N^{-lambda-1}, ...
SumResult monotone_power_sum(const std::function<double(int)>& c, double lambda,
                             int n0 = 64, int levels = 8);

} // namespace hyperint::series
