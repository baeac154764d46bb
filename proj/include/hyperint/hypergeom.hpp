#pragma once

#include <vector>

#include "hyperint/errors.hpp"
#include "hyperint/specfun.hpp"

namespace hyperint::hypergeom {

// Parameters of a pFq series: p numerator values, q denominator values, and
// the argument z. No denominator may be a non-positive integer; p <= q+1.
struct ParamList {
    std::vector<double> numerators;
    std::vector<double> denominators;
    double argument = 0.0;
};

enum class Verdict {
    AbsolutelyConvergent,
    ConditionallyConvergent,
    Divergent,
    Entire,
};

struct ConvergenceClass {
    double omega; // sum of denominators minus sum of numerators
    Verdict verdict;
};

const char* to_string(Verdict v) noexcept;

// Rising factorial (a)_n.
double pochhammer(double a, int n);

// Overflow-safe form for large n: log|(a)_n| and sign.
specfun::SignedLogGamma log_pochhammer(double a, int n);

ConvergenceClass classify(const ParamList& params);

// Evaluate the pFq series. Direct recursion inside the unit disk / entire
// case, Euler transformation at z = -1, direct summation with power-tail
// extrapolation at z = +1 (omega > 0). SlowConvergence past max_terms.
double pfq(const ParamList& params, double tol, int max_terms = 10000);

// 2F1(a,b;c;-1) through the Pfaff transformation to argument 1/2, which is
// absolutely convergent for any parameter values in scope.
double gauss_2f1_minus1(double a, double b, double c, double tol);

// 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)), c-a-b > 0.
double gauss_sum(double alpha, double beta, double gamma);

// 2F1(a,b;1+a-b;-1) = Gamma(1+a-b)Gamma(1+a/2)/(Gamma(1+a)Gamma(1+a/2-b)).
double kummer_sum(double alpha, double beta);

// 4F3(a,1+a/2,b,c; a/2,1+a-b,1+a-c; -1)
//   = Gamma(1+a-b)Gamma(1+a-c)/(Gamma(1+a)Gamma(1+a-b-c)), a/2-b-c > -1.
double f43_sum(double alpha, double beta, double gamma);

} // namespace hyperint::hypergeom
