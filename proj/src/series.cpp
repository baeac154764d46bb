#include "hyperint/series.hpp"

#include <cmath>
#include <vector>

#include "hyperint/errors.hpp"

namespace hyperint::series {

SumResult euler_alternating_sum(const std::function<double(int)>& c, double tol, int max_depth) {
    // Difference table in long double; the estimate at the minimal transformed
    // term is kept, since past that point the transform only accumulates noise.
    std::vector<long double> row(static_cast<size_t>(max_depth) + 1);
    for (int k = 0; k <= max_depth; ++k) row[static_cast<size_t>(k)] = static_cast<long double>(c(k));

    long double max_val = 0.0L;
    for (const long double v : row) max_val = std::max(max_val, std::abs(v));

    long double tail = 0.0L, half = 0.5L;
    long double best = 0.0L, best_term = -1.0L;
    int len = max_depth + 1, used = 0, small_count = 0;
    for (int k = 0; k < max_depth && len > 1; ++k) {
        const long double term = half * row[0];
        tail += term;
        const long double at = std::abs(static_cast<double>(term));
        if (best_term < 0.0L || at < best_term) {
            best_term = at;
            best = tail;
        }
        for (int i = 0; i < len - 1; ++i) row[static_cast<size_t>(i)] -= row[static_cast<size_t>(i) + 1];
        --len;
        half *= 0.5L;
        used = k + 1;
        // transformed-term magnitudes can dip and recover; stop only on a
        // sustained drop or once clearly past the minimum
        const double scale = std::max(std::abs(static_cast<double>(tail)), 1e-300);
        small_count = (at < tol * scale) ? small_count + 1 : 0;
        if (small_count >= 4 && k > 10) break;
        if (best_term >= 0.0L && at > 1e8 * static_cast<double>(best_term) && k > 20) break;
    }
    // difference-table rounding floor
    const double noise = 5.4e-20 * static_cast<double>(max_val) * used;
    const double est = std::max(static_cast<double>(best_term < 0.0L ? 0.0L : best_term), noise);
    return {static_cast<double>(best), est, used};
}

SumResult monotone_power_sum(const std::function<double(int)>& c, double lambda,
                             int n0, int levels) {
    if (!(lambda > 1.0)) throw DivergentSeries("monotone_power_sum: requires lambda > 1");

    // Partial sums at N = n0 * 2^i.
    std::vector<double> s(static_cast<size_t>(levels));
    double acc = 0.0;
    int n = 0;
    for (int i = 0; i < levels; ++i) {
        const int target = n0 << i;
        for (; n < target; ++n) acc += c(n);
        s[static_cast<size_t>(i)] = acc;
    }
    const int n_terms = n;

    // Tail of the full sum behaves as N^{1-lambda}(b0 + b1/N + b2/N^2 + ...);
    // eliminate the exponents one by one across the geometric checkpoints.
    std::vector<double> v = s;
    double prev_last = v.back();
    double est = std::abs(v[v.size() - 2] - v.back());
    for (int j = 0; static_cast<int>(v.size()) > 1; ++j) {
        const double e = (j == 0) ? (1.0 - lambda) : (-lambda - (j - 1));
        const double theta = std::pow(2.0, e);
        for (size_t i = 0; i + 1 < v.size(); ++i) v[i] = (v[i + 1] - theta * v[i]) / (1.0 - theta);
        v.pop_back();
        const double cur = v.back();
        est = std::abs(cur - prev_last);
        prev_last = cur;
    }
    return {prev_last, est, n_terms};
}

} // namespace hyperint::series
