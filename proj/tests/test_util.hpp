#pragma once

#include <cmath>
#include <functional>
#include <vector>

// Test-side oracles. None of these share code with the library's own
// acceleration machinery.

namespace testutil {

// Cohen-Rodriguez Villegas-Zagier acceleration for sum_{k>=0} (-1)^k a_k.
// Error ~ 5.83^{-n}; n = 40 is plenty for double targets.
inline double cvz_alternating(const std::function<double(int)>& a, int n = 48) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

// Direct summation with a three-term Euler-Maclaurin tail for series whose
// terms behave like (n + shift)^{-s}, s > 1.
inline double powerlike_sum(const std::function<double(double)>& term, double s, double shift,
                            int n_direct = 200000) {
    double acc = 0.0;
    for (int n = 0; n < n_direct; ++n) acc += term(n);
    const double w = n_direct + shift;
    acc += std::pow(w, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(w, -s) + s / 12.0 * std::pow(w, -s - 1.0);
    return acc;
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// Small deterministic PRNG so expected values never shift between runs.
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    double uniform(double lo, double hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const double u = static_cast<double>((state >> 11) & ((1ULL << 53) - 1)) / 9007199254740992.0;
        return lo + (hi - lo) * u;
    }
};

} // namespace testutil
