#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hyperint/specfun.hpp"
#include "test_util.hpp"

using namespace hyperint;
using specfun::Cplx;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Independent log-Gamma for the complex recurrence-descent oracle: Stirling
// series at large |z|.
Cplx stirling_ln_gamma(Cplx z) {
    const Cplx inv = 1.0 / z;
    const Cplx inv2 = inv * inv;
    const double coeff[6] = {1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
                             -691.0 / 360360.0};
    Cplx corr(0.0, 0.0);
    Cplx p = inv;
    for (double c : coeff) {
        corr += c * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.918938533204672741780329736406 + corr;
}

} // namespace

TEST_CASE("ln_gamma real values") {
    CHECK(specfun::ln_gamma(Cplx(0.5, 0.0)).real() == doctest::Approx(0.572364942924700087).epsilon(1e-14));
    CHECK(specfun::ln_gamma(Cplx(5.0, 0.0)).real() == doctest::Approx(3.17805383034794562).epsilon(1e-14));
    CHECK(specfun::ln_gamma(Cplx(0.5, 0.0)).imag() == doctest::Approx(0.0));
}

TEST_CASE("ln_gamma complex via recurrence descent from the Stirling region") {
    // Gamma(z) = Gamma(z+n) / prod_{k=0}^{n-1} (z+k), oracle side at z+10.
    const Cplx z(1.0, 1.0);
    Cplx ln_desc = stirling_ln_gamma(z + 10.0);
    for (int k = 0; k < 10; ++k) ln_desc -= std::log(z + static_cast<double>(k));
    const Cplx got = specfun::ln_gamma(z);
    CHECK(std::abs(std::exp(got) - std::exp(ln_desc)) <= 1e-13 * std::abs(std::exp(ln_desc)));
}

TEST_CASE("ln_gamma poles") {
    CHECK_THROWS_AS(specfun::ln_gamma(Cplx(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(specfun::ln_gamma(Cplx(-3.0, 0.0)), PoleError);
    CHECK_THROWS_AS(specfun::ln_gamma_signed(-2.0 + 5e-13), PoleError);
}

TEST_CASE("gamma recurrence invariant, real and complex") {
    testutil::Rng rng(12345);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(0.1, 40.0);
        const double lhs = specfun::gamma_fn(x + 1.0);
        const double rhs = x * specfun::gamma_fn(x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
    for (int i = 0; i < 1000; ++i) {
        const double re = rng.uniform(-35.0, 35.0);
        const double im = rng.uniform(-20.0, 20.0);
        Cplx z(re, im);
        if (std::abs(z) > 40.0 || std::abs(z) < 0.1) continue;
        if (im == 0.0 && specfun::near_nonpositive_integer(re, 1e-6)) continue;
        const Cplx lhs = std::exp(specfun::ln_gamma(z + 1.0));
        const Cplx rhs = z * std::exp(specfun::ln_gamma(z));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("gamma reflection invariant") {
    testutil::Rng rng(777);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.uniform(0.01, 0.99);
        const double p = specfun::gamma_fn(x) * specfun::gamma_fn(1.0 - x) * std::sin(kPi * x);
        CHECK(std::abs(p - kPi) <= 1e-11 * kPi);
    }
}

TEST_CASE("beta values and symmetry") {
    CHECK(specfun::beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    CHECK(specfun::beta(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(specfun::beta(0.75, 0.25) == doctest::Approx(4.44288293815836625).epsilon(1e-13));
    testutil::Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(0.05, 8.0), b = rng.uniform(0.05, 8.0);
        CHECK(specfun::beta(a, b) == doctest::Approx(specfun::beta(b, a)).epsilon(1e-14));
    }
}

TEST_CASE("digamma values") {
    CHECK(specfun::digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-13));
    CHECK(specfun::digamma(0.5) == doctest::Approx(-1.96351002602142348).epsilon(1e-13));
    CHECK(specfun::digamma(0.75) - specfun::digamma(0.25) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK_THROWS_AS(specfun::digamma(0.0), PoleError);
    CHECK_THROWS_AS(specfun::digamma(-4.0), PoleError);
}

TEST_CASE("digamma recurrence and complex consistency") {
    testutil::Rng rng(31337);
    for (int i = 0; i < 400; ++i) {
        const double x = rng.uniform(0.02, 45.0);
        CHECK(std::abs(specfun::digamma(x + 1.0) - specfun::digamma(x) - 1.0 / x) <=
              1e-12 * std::max(1.0, std::abs(specfun::digamma(x))));
    }
    for (int i = 0; i < 200; ++i) {
        const Cplx z(rng.uniform(0.05, 20.0), rng.uniform(-20.0, 20.0));
        const Cplx lhs = specfun::digamma(z + 1.0);
        const Cplx rhs = specfun::digamma(z) + 1.0 / z;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("trigamma values") {
    CHECK(specfun::trigamma(1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    const double sixteen_g = 16.0 * specfun::catalan();
    CHECK(specfun::trigamma(0.25) - specfun::trigamma(0.75) == doctest::Approx(sixteen_g).epsilon(1e-12));
    // direct summation oracle: 10^6 terms plus Euler-Maclaurin tail
    const double oracle =
        testutil::powerlike_sum([](double n) { return 1.0 / ((n + 10.0) * (n + 10.0)); }, 2.0, 10.0, 1000000);
    CHECK(specfun::trigamma(10.0) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK_THROWS_AS(specfun::trigamma(0.0), DomainError);
    CHECK_THROWS_AS(specfun::trigamma(-1.5), DomainError);
}

TEST_CASE("trigamma matches central difference of digamma") {
    for (double x : {0.3, 0.75, 1.0, 2.5, 7.0, 20.0}) {
        const double h = 1e-4;
        const double fd = (specfun::digamma(x + h) - specfun::digamma(x - h)) / (2.0 * h);
        CHECK(std::abs(specfun::trigamma(x) - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("hurwitz zeta values") {
    CHECK(specfun::hurwitz_zeta(2.0, 1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(specfun::hurwitz_zeta(2.0, 0.5) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
    for (double a : {0.25, 1.0, 2.5})
        CHECK(specfun::hurwitz_zeta(0.0, a) == doctest::Approx(0.5 - a).epsilon(1e-12));
    CHECK_THROWS_AS(specfun::hurwitz_zeta(2.0, -1.0), DomainError);
    CHECK_THROWS_AS(specfun::hurwitz_zeta(1.0, 2.0), PoleError);
    CHECK_THROWS_AS(specfun::hurwitz_zeta(-3.5, 2.0), UnsupportedRegion);
}

TEST_CASE("hurwitz zeta shift identity") {
    for (double s : {-1.5, -0.5, 0.5, 2.0, 3.7}) {
        for (double a : {0.25, 0.75, 1.0, 4.0}) {
            const double lhs = specfun::hurwitz_zeta(s, a) - specfun::hurwitz_zeta(s, a + 1.0);
            const double rhs = std::pow(a, -s);
            CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("riemann zeta values") {
    CHECK(specfun::zeta(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(specfun::zeta(4.0) == doctest::Approx(1.08232323371113819).epsilon(1e-13));
    // eta-function oracle: zeta(s) = eta(s)/(1 - 2^{1-s})
    const double s = 0.5;
    const double eta = testutil::cvz_alternating([&](int k) { return std::pow(k + 1.0, -s); });
    CHECK(specfun::zeta(s) == doctest::Approx(eta / (1.0 - std::pow(2.0, 1.0 - s))).epsilon(1e-12));
}

TEST_CASE("zed values and the alternating-sum identity") {
    CHECK(specfun::zed(2.0, 0.25) == doctest::Approx(16.0 * specfun::catalan()).epsilon(1e-12));
    // sum (-1)^n (n+x)^{-s} = 2^{-s} (zeta(s,x/2) - zeta(s,(1+x)/2))
    const double lhs = 0.25 * (specfun::hurwitz_zeta(2.0, 0.5) - specfun::hurwitz_zeta(2.0, 1.0));
    CHECK(lhs == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-12));
    // Euler-accelerated oracle for Z(1.5, 0.3) = 2^{1.5} sum (-1)^n (n+0.6)^{-1.5}
    const double oracle =
        std::pow(2.0, 1.5) * testutil::cvz_alternating([](int n) { return std::pow(n + 0.6, -1.5); });
    CHECK(specfun::zed(1.5, 0.3) == doctest::Approx(oracle).epsilon(1e-12));
    // large-a branch against the same oracle
    const double big = std::pow(2.0, 2.5) * testutil::cvz_alternating([](int n) { return std::pow(n + 14.6, -2.5); });
    CHECK(specfun::zed(2.5, 7.3) == doctest::Approx(big).epsilon(1e-12));
}

TEST_CASE("alternating zeta identity across the continuation region") {
    for (double s : {0.5, 1.5, 2.0}) {
        for (double x : {0.25, 1.0, 3.0}) {
            const double lhs =
                std::pow(2.0, -s) * (specfun::hurwitz_zeta(s, 0.5 * x) - specfun::hurwitz_zeta(s, 0.5 + 0.5 * x));
            const double rhs = testutil::cvz_alternating([&](int n) { return std::pow(n + x, -s); });
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("alt_psi_sum values and identity") {
    CHECK(specfun::alt_psi_sum(1.0) == doctest::Approx(0.693147180559945309).epsilon(1e-13));
    CHECK(specfun::alt_psi_sum(0.5) == doctest::Approx(kPi / 2.0).epsilon(1e-13));
    const double oracle = testutil::cvz_alternating([](int n) { return 1.0 / (n + 2.7); });
    CHECK(specfun::alt_psi_sum(2.7) == doctest::Approx(oracle).epsilon(1e-12));
    testutil::Rng rng(4242);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(0.01, 10.0);
        const double direct = testutil::cvz_alternating([&](int n) { return 1.0 / (n + x); });
        CHECK(std::abs(specfun::alt_psi_sum(x) - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    }
    CHECK_THROWS_AS(specfun::alt_psi_sum(0.0), DomainError);
}

TEST_CASE("catalan constant") {
    CHECK(specfun::catalan() == doctest::Approx(0.915965594177219015).epsilon(1e-14));
    const double series = testutil::cvz_alternating([](int n) { return std::pow(2.0 * n + 1.0, -2.0); });
    CHECK(std::abs(specfun::catalan() - series) <= 1e-14);
    // trigamma route: psi'(1/4) - psi'(3/4) = 16 G
    CHECK(specfun::trigamma(0.25) - specfun::trigamma(0.75) ==
          doctest::Approx(16.0 * specfun::catalan()).epsilon(1e-12));
}

TEST_CASE("hurwitz_zeta_diff stays accurate near the pole") {
    // both zetas blow up like 1/(s-1); the difference approaches
    // psi(3/4) - psi(1/4) = pi with an O(s-1) slope
    const double above = specfun::hurwitz_zeta_diff(1.0 + 1e-9, 0.25, 0.75);
    const double below = specfun::hurwitz_zeta_diff(1.0 - 1e-9, 0.25, 0.75);
    CHECK(above == doctest::Approx(3.14159265871657069).epsilon(1e-11));
    CHECK(below == doctest::Approx(3.14159264846301579).epsilon(1e-11));
    CHECK(0.5 * (above + below) == doctest::Approx(kPi).epsilon(1e-11));
}
