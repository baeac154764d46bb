#pragma once

#include <string>
#include <vector>

#include "hyperint/errors.hpp"

namespace hyperint::closedform {

// The four integral families: numerator^m(ax) over denominator^nu(bx) on
// (0, inf), weighted by x^{mu-1} and optionally exp(-beta_weight * x).
enum class Family {
    CoshOverCosh, // I1
    SinhOverCosh, // I2
    CoshOverSinh, // I3
    SinhOverSinh, // I4
};

struct IntegralSpec {
    Family family = Family::CoshOverCosh;
    int m = 0;
    double mu = 1.0;
    double nu = 1.0;
    double a = 0.0;
    double b = 1.0;
    double beta_weight = 0.0;
    bool trig = false; // numerator cos/sin(ax) instead of cosh/sinh(ax); m must be 1
};

struct Validity {
    double nu_star = 0.0; // a/b
    bool convergent = false;
    std::string reason;
};

struct EvalResult {
    double value = 0.0;
    std::string formula_id;
    double est_error = 0.0;
    std::vector<std::string> warnings;
};

const char* family_name(Family f) noexcept;
bool family_numerator_sinh(Family f) noexcept;
bool family_denominator_sinh(Family f) noexcept;

// Convergence verdict: nu > m*nu_star + beta/b at infinity, plus the x = 0
// conditions (I1: mu > 0; I2: mu + m > 0; I3: nu < mu; I4: nu < m + mu).
Validity validity(const IntegralSpec& spec);

// alpha_r = (2r - m) a/(2b) + beta/(2b), 0 <= r <= m.
double alpha_r(int r, const IntegralSpec& spec);

// mu = 1 dispatcher: binomial 2F1(-1) sums for cosh denominators, Gamma-ratio
// sums for sinh denominators, with the psi-form limit at integer nu in I4.
EvalResult eval_section2(const IntegralSpec& spec);

// m = 1, mu = 1 closed forms: Beta function forms (cosh/cosh), Beta minus
// 2F1(-1) (sinh/cosh), trigonometric-prefactor Beta forms (sinh denominators).
EvalResult eval_m1_closed(const IntegralSpec& spec);

// m = 1, mu = 1 sinh/cosh as a single 3F2(-1); secondary route used for
// cross-checking eval_m1_closed.
EvalResult eval_m1_3f2(const IntegralSpec& spec);

// m = 1, nu = 1, mu = 1 elementary values: (pi/2b) sec, (pi/2b) tan, and the
// sec-minus-psi form, for 0 <= a/b < 1.
EvalResult eval_nu1_elementary(const IntegralSpec& spec);

// Integral of sinh^mu x / cosh^nu x as a Beta function, nu > mu > -1.
EvalResult eval_beta_power(double mu, double nu);

// General x^{mu-1} weight: binomial-in-r, series-in-n double sum; Euler
// transformation for alternating inner sums (cosh denominator) and power-tail
// extrapolation for monotone ones (sinh denominator).
EvalResult eval_section3_series(const IntegralSpec& spec);

enum class ZetaVariant { CoshSinh, SinhSinh, CoshCosh, SinhCosh };

// m = 1, nu = 1 Hurwitz-zeta closed forms for general mu.
EvalResult eval_zeta_forms(ZetaVariant variant, double mu, double a, double b);

enum class Mu2Variant { SinhCosh, CoshSinh, CoshCosh };

// mu = 2, m = 1, nu = 1 elementary forms (derivatives of the nu = 1 family).
EvalResult eval_mu2_elementary(Mu2Variant variant, double a, double b);

enum class TrigVariant { CosOverCosh, SinOverSinh, SinOverCosh };

// Trigonometric numerators: cos(ax)/cosh(bx), sin(ax)/sinh(bx),
// sin(ax)/cosh(bx) over (0, inf).
EvalResult eval_trig(TrigVariant variant, double a, double b);

enum class Ex3Variant { CoshOverSinh2, SinhOverCosh2 };

// x^{mu-1} cosh x / sinh^2 x (mu > 2) and x^{mu-1} sinh x / cosh^2 x
// (mu > -1) with their zeta closed forms and the mu = 0, 1 special values.
EvalResult eval_example3(Ex3Variant variant, double mu);

// Formula dispatcher: picks the strongest closed form available for the
// given integral instance.
EvalResult evaluate(const IntegralSpec& spec);

} // namespace hyperint::closedform
