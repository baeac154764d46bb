#pragma once

#include <complex>

#include "hyperint/errors.hpp"

namespace hyperint::specfun {

using Cplx = std::complex<double>;

// log|Gamma(x)| together with the sign of Gamma(x); the natural currency
// for Gamma ratios whose arguments may be negative non-integers.
struct SignedLogGamma {
    double log_abs;
    double sign; // +1 or -1
};

// Catalan constant G = sum (-1)^n/(2n+1)^2.
inline constexpr double kCatalan = 0.915965594177219015054603514932384110774;

double catalan() noexcept;

// True when x is within `tol` of a non-positive integer (pole of Gamma/psi).
bool near_nonpositive_integer(double x, double tol = 1e-12) noexcept;

// Principal-branch log-Gamma. Lanczos approximation, reflection for Re z < 1/2.
Cplx ln_gamma(Cplx z);

// Real-axis variant carrying the sign of Gamma(x) explicitly.
SignedLogGamma ln_gamma_signed(double x);

double gamma_fn(double x);

// Gamma(a1)*Gamma(a2)/(Gamma(b1)*Gamma(b2)), overflow-safe, sign-correct.
// A pole in a numerator argument raises PoleError; a pole in a denominator
// argument sends the ratio to zero.
double gamma_ratio(double a1, double a2, double b1, double b2);

Cplx beta(Cplx alpha, Cplx beta_arg);
double beta(double alpha, double beta_arg);

Cplx digamma(Cplx z);
double digamma(double x);

double trigamma(double x);

// Hurwitz zeta via Euler-Maclaurin; analytic continuation for s <= 1,
// supported down to s > -3.
double hurwitz_zeta(double s, double a);

// zeta(s,a1) - zeta(s,a2) evaluated without the catastrophic cancellation
// that plain subtraction suffers near s = 1. Requires a1, a2 > 0.
double hurwitz_zeta_diff(double s, double a1, double a2);

double zeta(double s);

// Z(mu, a) = zeta(mu, a) - zeta(mu, a + 1/2).
double zed(double mu, double a);

// sum (-1)^n/(n+x) = (psi((1+x)/2) - psi(x/2))/2, x > 0.
double alt_psi_sum(double x);

} // namespace hyperint::specfun
