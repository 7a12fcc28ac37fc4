#ifndef AIRIS_TEST_UTIL_HPP
#define AIRIS_TEST_UTIL_HPP

#include <cmath>
#include <functional>
#include <vector>

// Shared test-side oracles. These stay independent of the implementation
// paths they check: plain quadrature, finite differences, and brute-force
// convolution.

namespace testutil {

inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 == 1) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-13, int depth = 40) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Central finite difference for the n-th derivative, step h.
inline double central_fd(const std::function<double(double)>& f, double s, int n, double h) {
    double sum = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
        if (j > 0) binom *= static_cast<double>(n - j + 1) / j;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binom * f(s + (n / 2.0 - j) * h);
    }
    return sum / std::pow(h, n);
}

// Richardson-extrapolated n-th derivative (three halving levels).
inline double richardson_fd(const std::function<double(double)>& f, double s, int n,
                            double h = 1e-2) {
    std::vector<double> d = {central_fd(f, s, n, h), central_fd(f, s, n, h / 2.0),
                             central_fd(f, s, n, h / 4.0)};
    // error is O(h^2): one extrapolation level to h^4, one more to h^6
    std::vector<double> e1 = {(4.0 * d[1] - d[0]) / 3.0, (4.0 * d[2] - d[1]) / 3.0};
    return (16.0 * e1[1] - e1[0]) / 15.0;
}

// E[(X_1 + ... + X_M)^k] from component moments mu[0..k] by binomial
// convolution over one added component at a time.
inline double convolution_sum_moment(int k, int m, const std::vector<double>& mu) {
    std::vector<double> cur(mu.begin(), mu.begin() + k + 1);  // moments of S_1
    for (int added = 2; added <= m; ++added) {
        std::vector<double> next(k + 1, 0.0);
        for (int order = 0; order <= k; ++order) {
            double binom = 1.0;
            for (int j = 0; j <= order; ++j) {
                if (j > 0) binom *= static_cast<double>(order - j + 1) / j;
                next[order] += binom * cur[order - j] * mu[j];
            }
        }
        cur = next;
    }
    return cur[k];
}

}  // namespace testutil

#endif
