#include "hyperint/quad.hpp"

#include <cmath>

namespace hyperint::quad {

namespace {

constexpr double kPiHalf = 1.570796326853981633974483096156608458;
constexpr double kUmax = 7.5;       // transform variable range
constexpr double kXFloor = 1e-250;  // nodes closer to 0 are dropped
constexpr int kMaxLevel = 12;

struct Accum {
    double sum = 0.0;
    int n_evals = 0;
};

double eval_checked(const std::function<double(double)>& f, double x) {
    double v = f(x);
    if (!std::isfinite(v)) {
        // Transform maps can land on the singular endpoint; nudge once.
        const double x2 = std::nextafter(x, 1.0);
        v = f(x2);
        if (!std::isfinite(v)) throw NonFinite("integrate_semi_infinite: integrand not finite at node");
    }
    return v;
}

// One tanh-sinh node pair on (0,1) at transform variable u > 0 (single node
// at u = 0). Node distances to the endpoints are computed directly to keep
// x > 0 accurate down to kXFloor.
double ts_node(const std::function<double(double)>& f, double u, Accum& acc) {
    const double w = kPiHalf * std::sinh(u);
    const double cw = kPiHalf * std::cosh(u);
    const double e2 = std::exp(-2.0 * std::abs(w));
    const double dxdu = cw * 2.0 * e2 / ((1.0 + e2) * (1.0 + e2));
    if (u == 0.0) {
        acc.n_evals++;
        return eval_checked(f, 0.5) * dxdu;
    }
    double out = 0.0;
    const double xm = std::exp(-2.0 * w - std::log1p(e2)); // near 0
    const double xp = 1.0 / (1.0 + e2);                    // near 1
    if (xm >= kXFloor) {
        acc.n_evals++;
        out += eval_checked(f, xm) * dxdu;
    }
    acc.n_evals++;
    out += eval_checked(f, xp) * dxdu;
    return out;
}

// Exp-sinh node pair on [1, inf) at transform variable u >= 0: x = 1 + e^w
// with w = (pi/2) sinh(+-u) covers both the x -> 1 and x -> inf ends.
double es_node(const std::function<double(double)>& f, double u, Accum& acc) {
    const double w = kPiHalf * std::sinh(u);
    const double cw = kPiHalf * std::cosh(u);
    double out = 0.0;
    if (w <= 700.0) {
        const double ew = std::exp(w);
        acc.n_evals++;
        out += eval_checked(f, 1.0 + ew) * cw * ew;
    }
    if (u > 0.0) {
        const double em = std::exp(-w);
        if (em > 0.0) {
            acc.n_evals++;
            out += eval_checked(f, 1.0 + em) * cw * em;
        }
    }
    return out;
}

// Sweep nodes u = k*h (k odd when refining) outward from 0, dropping out once
// contributions are negligible.
template <typename NodeFn>
double sweep(NodeFn&& node, double h, bool odd_only, double scale) {
    double total = 0.0;
    const int step = odd_only ? 2 : 1;
    for (int k = odd_only ? 1 : 0; k * h <= kUmax; k += step) {
        if (!odd_only && k == 0) {
            total += node(0.0);
            continue;
        }
        const double t = node(k * h);
        total += t;
        if (k * h > 3.0 && std::abs(t) < 1e-18 * std::max(std::abs(total), scale)) break;
    }
    return total;
}

// Trapezoidal DE rule with level halving; shared by both pieces.
template <typename NodeFn>
bool de_rule(NodeFn&& node, double tol, double& value, double& err) {
    double h = 1.0;
    double total = sweep(node, h, false, 0.0);
    double prev = h * total;
    err = std::abs(prev);
    for (int level = 1; level <= kMaxLevel; ++level) {
        h *= 0.5;
        total += sweep(node, h, true, std::abs(total));
        const double cur = h * total;
        err = std::abs(cur - prev);
        prev = cur;
        if (level >= 3 && err <= tol * std::max(std::abs(cur), 1.0e-300)) {
            value = cur;
            return true;
        }
    }
    value = prev;
    return false;
}

} // namespace

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double singular_exponent, double tol) {
    if (!(singular_exponent > 0.0))
        throw DomainError("integrate_semi_infinite: singular exponent must be positive");

    QuadResult res;
    Accum acc;

    double v01 = 0.0, e01 = 0.0;
    const bool ok01 = de_rule([&](double u) { return ts_node(f, u, acc); }, 0.5 * tol, v01, e01);

    double v1i = 0.0, e1i = 0.0;
    const bool ok1i = de_rule([&](double u) { return es_node(f, u, acc); }, 0.5 * tol, v1i, e1i);

    res.value = v01 + v1i;
    res.err_est = e01 + e1i;
    res.n_evals = acc.n_evals;
    res.converged = ok01 && ok1i;
    if (!res.converged) throw NoConvergence("integrate_semi_infinite: level budget exhausted");
    return res;
}

namespace {

// log cosh(t) and log sinh(t) without overflow for large t.
double log_cosh(double t) {
    if (t < 350.0) return std::log(std::cosh(t));
    return t - 0.6931471805599453094 + std::log1p(std::exp(-2.0 * t));
}

double log_sinh(double t) {
    if (t <= 0.0) throw DomainError("log_sinh: requires t > 0");
    if (t < 350.0) return std::log(std::sinh(t));
    return t - 0.6931471805599453094 + std::log1p(-std::exp(-2.0 * t));
}

} // namespace

Integrand build_integrand(const closedform::IntegralSpec& spec) {
    const closedform::Validity v = closedform::validity(spec);
    if (!v.convergent) throw NotConvergent("build_integrand: " + v.reason);

    const bool num_sinh = closedform::family_numerator_sinh(spec.family);
    const bool den_sinh = closedform::family_denominator_sinh(spec.family);
    const int m = spec.m;
    const double mu = spec.mu, nu = spec.nu, a = spec.a, b = spec.b, beta = spec.beta_weight;

    Integrand out;
    out.singular_exponent = mu + ((num_sinh && (a > 0.0 || spec.trig)) ? m : 0) - (den_sinh ? nu : 0.0);

    if (spec.trig) {
        out.f = [=](double x) {
            const double den = den_sinh ? log_sinh(b * x) : log_cosh(b * x);
            const double osc = num_sinh ? std::sin(a * x) : std::cos(a * x);
            return osc * std::exp((mu - 1.0) * std::log(x) - nu * den - beta * x);
        };
        return out;
    }

    out.f = [=](double x) {
        double ln = (mu - 1.0) * std::log(x) - beta * x;
        if (m > 0 && a > 0.0) ln += m * (num_sinh ? log_sinh(a * x) : log_cosh(a * x));
        ln -= nu * (den_sinh ? log_sinh(b * x) : log_cosh(b * x));
        return std::exp(ln);
    };
    return out;
}

QuadResult integrate_spec(const closedform::IntegralSpec& spec, double tol) {
    const Integrand ig = build_integrand(spec);
    return integrate_semi_infinite(ig.f, ig.singular_exponent, tol);
}

} // namespace hyperint::quad
