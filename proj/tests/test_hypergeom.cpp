#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyperint/hypergeom.hpp"
#include "test_util.hpp"

using namespace hyperint;
using hypergeom::ParamList;
using hypergeom::Verdict;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

double poch_d(double a, int n) { return hypergeom::pochhammer(a, n); }

// test-side alternating pFq(-1) oracle
double pfq_minus1_cvz(const std::vector<double>& num, const std::vector<double>& den) {
    return testutil::cvz_alternating([&](int n) {
        double t = 1.0;
        for (double a : num) t *= poch_d(a, n);
        for (double b : den) t /= poch_d(b, n);
        for (int k = 2; k <= n; ++k) t /= k;
        return t;
    }, 44);
}
} // namespace

TEST_CASE("pochhammer") {
    CHECK(hypergeom::pochhammer(3.0, 4) == doctest::Approx(360.0));
    CHECK(hypergeom::pochhammer(-7.3, 0) == 1.0);
    CHECK(hypergeom::pochhammer(0.5, 3) == doctest::Approx(1.875));
    CHECK_THROWS_AS(hypergeom::pochhammer(1.0, -1), DomainError);
    const auto lp = hypergeom::log_pochhammer(1.5, 200);
    CHECK(lp.sign == 1.0);
    CHECK(lp.log_abs == doctest::Approx(std::lgamma(201.5) - std::lgamma(1.5)).epsilon(1e-12));
    // (-2.5)_3 = (-2.5)(-1.5)(-0.5) < 0
    const auto ln = hypergeom::log_pochhammer(-2.5, 3);
    CHECK(ln.sign == -1.0);
    CHECK(ln.sign * std::exp(ln.log_abs) == doctest::Approx(hypergeom::pochhammer(-2.5, 3)).epsilon(1e-13));
}

TEST_CASE("classify against the omega rule") {
    // 2F1(nu, nu/2+alpha; 1+nu/2+alpha; -1): omega = 1 - nu
    for (double nu : {0.5, 1.5, 2.5}) {
        const double w = 0.5 * nu + 0.3;
        const auto c = hypergeom::classify({{nu, w}, {1.0 + w}, -1.0});
        CHECK(c.omega == doctest::Approx(1.0 - nu).epsilon(1e-15));
        if (nu == 0.5) CHECK(c.verdict == Verdict::AbsolutelyConvergent);
        if (nu == 1.5) CHECK(c.verdict == Verdict::ConditionallyConvergent);
        if (nu == 2.5) CHECK(c.verdict == Verdict::Divergent);
    }
    CHECK(hypergeom::classify({{1.0}, {2.0, 3.0}, 100.0}).verdict == Verdict::Entire);
    CHECK(hypergeom::classify({{1.0, 1.0}, {3.0}, 1.5}).verdict == Verdict::Divergent);
    CHECK(hypergeom::classify({{2.0, 2.0}, {3.0}, 1.0}).verdict == Verdict::Divergent);
    CHECK(hypergeom::classify({{1.0, 1.0}, {3.0}, 1.0}).verdict == Verdict::AbsolutelyConvergent);
}

TEST_CASE("pfq basic evaluations") {
    // terms of 2F1(1,1;3;1) are 2/((n+1)(n+2)); partial sums telescope to 2
    double partial = 0.0;
    for (int n = 0; n < 200000; ++n) partial += 2.0 / ((n + 1.0) * (n + 2.0));
    CHECK(partial == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(hypergeom::pfq({{1.0, 1.0}, {3.0}, 1.0}, 1e-12) == doctest::Approx(2.0).epsilon(1e-10));

    const double oracle = pfq_minus1_cvz({1.0, 0.5}, {1.5});
    CHECK(oracle == doctest::Approx(kPi / 4.0).epsilon(1e-13));
    CHECK(hypergeom::pfq({{1.0, 0.5}, {1.5}, -1.0}, 1e-12) == doctest::Approx(oracle).epsilon(1e-11));

    CHECK(hypergeom::pfq({{1.0}, {}, 0.5}, 1e-12) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("pfq errors") {
    CHECK_THROWS_AS(hypergeom::pfq({{2.5, 1.0}, {1.2}, -1.0}, 1e-12), DivergentSeries); // omega = -2.3
    CHECK_THROWS_AS(hypergeom::pfq({{1.0, 1.0}, {3.0}, 2.0}, 1e-12), DivergentSeries);
    CHECK_THROWS_AS(hypergeom::classify({{1.0, 1.0}, {-2.0}, 0.5}), PoleError);
    CHECK_THROWS_AS(hypergeom::classify({{1.0, 1.0, 1.0}, {}, 0.5}), DomainError);
}

TEST_CASE("gauss_2f1_minus1") {
    CHECK(hypergeom::gauss_2f1_minus1(1.0, 0.5, 1.5, 1e-13) == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    // Kummer oracle at nu = 1: 2F1(nu, nu/2; 1+nu/2; -1)
    CHECK(hypergeom::gauss_2f1_minus1(1.0, 0.5, 1.5, 1e-13) ==
          doctest::Approx(hypergeom::kummer_sum(1.0, 0.5)).epsilon(1e-12));
    CHECK(hypergeom::gauss_2f1_minus1(2.2, 0.0, 1.4, 1e-13) == 1.0);
    CHECK_THROWS_AS(hypergeom::gauss_2f1_minus1(1.0, 0.5, -2.0, 1e-13), PoleError);
}

TEST_CASE("gauss theorem") {
    CHECK(hypergeom::gauss_sum(1.0, 1.0, 3.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(hypergeom::gauss_sum(0.7, 0.0, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hypergeom::gauss_sum(0.3, 0.4, 2.0) ==
          doctest::Approx(hypergeom::pfq({{0.3, 0.4}, {2.0}, 1.0}, 1e-12)).epsilon(1e-10));
    CHECK_THROWS_AS(hypergeom::gauss_sum(1.0, 1.0, 2.0), DomainError);
}

TEST_CASE("kummer theorem") {
    CHECK(hypergeom::kummer_sum(1.0, 0.5) == doctest::Approx(kPi / 4.0).epsilon(1e-13));
    CHECK(hypergeom::kummer_sum(0.9, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hypergeom::kummer_sum(0.8, 0.3) ==
          doctest::Approx(hypergeom::gauss_2f1_minus1(0.8, 0.3, 1.5, 1e-13)).epsilon(1e-11));
}

TEST_CASE("4F3(-1) theorem") {
    CHECK(hypergeom::f43_sum(1.0, 0.5, 0.5) == doctest::Approx(kPi / 4.0).epsilon(1e-13));
    CHECK(hypergeom::f43_sum(1.7, 0.4, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // accelerated direct 4F3(-1) oracle
    const double alpha = 2.0, beta = 0.4, gamma = 0.7;
    const double oracle = pfq_minus1_cvz({alpha, 1.0 + 0.5 * alpha, beta, gamma},
                                         {0.5 * alpha, 1.0 + alpha - beta, 1.0 + alpha - gamma});
    CHECK(hypergeom::f43_sum(alpha, beta, gamma) == doctest::Approx(oracle).epsilon(1e-9));
    CHECK_THROWS_AS(hypergeom::f43_sum(1.0, 1.5, 1.0), DomainError);
}

TEST_CASE("theorem consistency on random parameters") {
    testutil::Rng rng(0xD1CE);
    int done = 0;
    while (done < 200) {
        const double alpha = rng.uniform(-1.0, 2.5);
        const double beta = rng.uniform(-1.0, 2.0);
        const double d = rng.uniform(0.15, 2.5);
        const double gamma = alpha + beta + d;
        if (gamma < 0.1) continue;
        const double series = hypergeom::pfq({{alpha, beta}, {gamma}, 1.0}, 1e-12);
        const double closed = hypergeom::gauss_sum(alpha, beta, gamma);
        CHECK(std::abs(series - closed) <= 1e-9 * std::max(1.0, std::abs(closed)));
        ++done;
    }
    done = 0;
    while (done < 200) {
        const double alpha = rng.uniform(-0.8, 2.5);
        const double beta = rng.uniform(-1.5, 0.85);
        const double c = 1.0 + alpha - beta;
        if (c < 0.2 || std::abs(1.0 + 0.5 * alpha - beta) < 0.05 || 1.0 + 0.5 * alpha < 0.1) continue;
        const double series = hypergeom::pfq({{alpha, beta}, {c}, -1.0}, 1e-12);
        const double closed = hypergeom::kummer_sum(alpha, beta);
        CHECK(std::abs(series - closed) <= 1e-9 * std::max(1.0, std::abs(closed)));
        ++done;
    }
}

TEST_CASE("pfaff route agrees with Euler acceleration") {
    testutil::Rng rng(5150);
    int done = 0;
    while (done < 60) {
        const double a = rng.uniform(0.1, 2.5);
        const double b = rng.uniform(0.1, 2.0);
        const double c = rng.uniform(0.3, 3.5);
        const double omega = c - a - b;
        if (omega <= -0.95) continue;
        const double pf = hypergeom::gauss_2f1_minus1(a, b, c, 1e-12);
        const double eu = hypergeom::pfq({{a, b}, {c}, -1.0}, 1e-12);
        CHECK(std::abs(pf - eu) <= 1e-10 * std::max(1.0, std::abs(pf)));
        ++done;
    }
}

TEST_CASE("contiguous relation spot check") {
    testutil::Rng rng(8080);
    for (int i = 0; i < 40; ++i) {
        const double a = rng.uniform(0.2, 3.0);
        const double b = rng.uniform(0.2, 3.0);
        const double c = rng.uniform(0.5, 4.0);
        const double z = rng.uniform(-0.5, 0.5);
        const double lhs = c * hypergeom::pfq({{a, b}, {c}, z}, 1e-13) -
                           c * hypergeom::pfq({{a, b - 1.0}, {c}, z}, 1e-13) -
                           a * z * hypergeom::pfq({{a + 1.0, b}, {c + 1.0}, z}, 1e-13);
        CHECK(std::abs(lhs) <= 1e-10 * std::max(1.0, c));
    }
}
