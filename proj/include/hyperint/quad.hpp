#pragma once

#include <functional>

#include "hyperint/closedform.hpp"
#include "hyperint/errors.hpp"

namespace hyperint::quad {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    int n_evals = 0;
    bool converged = false;
};

struct Integrand {
    std::function<double(double)> f;
    double singular_exponent = 1.0;
};

// Integrate f over (0, inf) where f(x) ~ x^{singular_exponent - 1} near 0
// (singular_exponent > 0) and decays exponentially at infinity. Splits at
// x = 1: tanh-sinh on (0,1], exp-sinh on [1,inf); halves the step until
// successive levels agree within tol (level budget 12).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double singular_exponent, double tol = 1e-11);

// Numerically stable integrand for a spec: evaluated in log space so that
// powers of cosh/sinh neither overflow beyond x ~ 350 nor underflow near 0.
// The singular exponent accounts for x^{mu-1}, a sinh/sin numerator zero, and
// a sinh denominator pole at x = 0.
Integrand build_integrand(const closedform::IntegralSpec& spec);

QuadResult integrate_spec(const closedform::IntegralSpec& spec, double tol = 1e-11);

} // namespace hyperint::quad
