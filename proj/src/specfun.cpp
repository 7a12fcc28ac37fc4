#include "airis/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace airis {
namespace specfun {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

double series_log_i(int nu, double x) {
    // log of sum_k (x/2)^{2k+nu} / (k! (k+nu)!), summed in linear scale
    // relative to the k = 0 term.
    const double lx2 = std::log(x / 2.0);
    const double lead = nu * lx2 - lgamma_pos(nu + 1.0);
    double term = 1.0;
    double sum = 1.0;
    const double q = x * x / 4.0;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<double>(k) * (k + nu));
        sum += term;
        if (term < sum * kEps) break;
    }
    return lead + std::log(sum);
}

double asymptotic_log_i(int nu, double x) {
    // Hankel expansion: I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k.
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 40; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= -num / (8.0 * k * x);
        if (std::abs(term) > prev) break;  // past the optimal truncation point
        sum += term;
        prev = std::abs(term);
        if (std::abs(term) < sum * kEps) break;
    }
    return x - 0.5 * std::log(2.0 * M_PI * x) + std::log(sum);
}

// Regularized lower incomplete gamma by power series (x < a+1).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 2000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lgamma_pos(a));
}

// Regularized upper incomplete gamma by Lentz continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 2000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - lgamma_pos(a));
}

}  // namespace

double lgamma_pos(double a) {
    if (!(a > 0.0)) throw std::domain_error("lgamma_pos: argument must be positive");
    return std::lgamma(a);
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        t[0] = 0.0;
        for (int i = 1; i < 171; ++i) t[i] = t[i - 1] + std::log(static_cast<double>(i));
        return t;
    }();
    if (n < 171) return table[static_cast<std::size_t>(n)];
    return std::lgamma(n + 1.0);
}

double log_bessel_i(int order, double x) {
    if (order < 0) throw std::domain_error("bessel_i: negative order");
    if (x < 0.0) throw std::domain_error("bessel_i: negative argument");
    if (x == 0.0) {
        return order == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    // The series stays accurate well past the crossover; 20 + order/2 keeps
    // the asymptotic branch in its high-accuracy region for every order.
    const double cross = 20.0 + 0.5 * order;
    return (x < cross) ? series_log_i(order, x) : asymptotic_log_i(order, x);
}

double bessel_i(int order, double x) {
    if (order < 0) throw std::domain_error("bessel_i: negative order");
    if (x < 0.0) throw std::domain_error("bessel_i: negative argument");
    if (x == 0.0) return order == 0 ? 1.0 : 0.0;
    return std::exp(log_bessel_i(order, x));
}

double bessel_i0(double x) { return bessel_i(0, x); }
double bessel_i1(double x) { return bessel_i(1, x); }

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_p: a must be positive");
    if (x < 0.0) throw std::domain_error("gamma_p: x must be nonnegative");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_q: a must be positive");
    if (x < 0.0) throw std::domain_error("gamma_q: x must be nonnegative");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double lower_incomplete_gamma(double a, double x) {
    return gamma_p(a, x) * std::exp(lgamma_pos(a));
}

double upper_gamma_half(int twice_s, double x) {
    if (twice_s < 1) throw std::domain_error("upper_gamma_half: s must be >= 1/2");
    if (x < 0.0) throw std::domain_error("upper_gamma_half: x must be nonnegative");
    // Bases. Gamma(1/2,x) = sqrt(pi) erfc(sqrt(x)); Gamma(1,x) = e^{-x}.
    double g;
    int t;
    if (twice_s % 2 == 1) {
        g = std::sqrt(M_PI) * std::erfc(std::sqrt(x));
        t = 1;
    } else {
        g = std::exp(-x);
        t = 2;
    }
    // Gamma(s+1,x) = s Gamma(s,x) + x^s e^{-x}; all terms positive.
    double pw = (x > 0.0) ? std::pow(x, t / 2.0) * std::exp(-x) : (t == 2 && x == 0.0 ? 0.0 : 0.0);
    while (t < twice_s) {
        g = (t / 2.0) * g + pw;
        pw *= (x > 0.0) ? x : 0.0;  // x^{s} e^{-x} -> x^{s+1} e^{-x}
        t += 2;
    }
    return g;
}

double marcum_q1(double a, double b) {
    if (a < 0.0 || b < 0.0) throw std::domain_error("marcum_q1: arguments must be nonnegative");
    if (b == 0.0) return 1.0;
    const double p = 0.5 * a * a;  // Poisson rate of the noncentrality mixture
    const double y = 0.5 * b * b;
    if (p == 0.0) return std::exp(-y);
    // Q1(a,b) = sum_k Pois(k; p) * Q(k+1, y), with Q the regularized upper
    // gamma accumulated by its own recurrence. All terms positive.
    // Entered in log scale so large y cannot underflow the whole sum.
    const double lp = std::log(p);
    const double ly = std::log(y);
    double sum = 0.0;
    double qk = gamma_q(1.0, y);            // e^{-y}
    double log_pois = -p;                   // log Pois(0; p)
    double log_tail = 0.0;                  // log of remaining Poisson mass bound
    double pois_cum = std::exp(-p);
    for (int k = 0; k < 10000; ++k) {
        if (k > 0) {
            log_pois += lp - std::log(static_cast<double>(k));
            // Q(k+1, y) = Q(k, y) + e^{-y} y^k / k!
            qk += std::exp(-y + k * ly - log_factorial(k));
            pois_cum += std::exp(log_pois);
        }
        sum += std::exp(log_pois) * std::min(qk, 1.0);
        log_tail = std::log1p(-std::min(pois_cum, 1.0 - 1e-300));
        if (k > p && log_tail < std::log(std::max(sum, 1e-300)) - 36.0) break;
        if (k > p + 60.0 * std::sqrt(p + 1.0) + 60.0) break;
    }
    return std::min(sum, 1.0);
}

namespace {

// Bessel-series evaluation of the unnormalized Nuttall Q, valid for all
// m, n >= 0. Terms are positive; the k-sum converges like a Poisson tail.
double nuttall_series(int m, int n, double a, double b) {
    const double y = 0.5 * b * b;
    if (a == 0.0) {
        if (n != 0) return 0.0;
        return std::pow(2.0, (m - 1) / 2.0) * upper_gamma_half(m + 1, y);
    }
    const double la2 = std::log(a / 2.0);
    double sum = 0.0;
    for (int k = 0; k < 4000; ++k) {
        const int ts = m + n + 2 * k + 1;  // 2s for Gamma(s, y)
        const double lg = std::log(upper_gamma_half(ts, y));
        const double lt = -0.5 * a * a + (n + 2.0 * k) * la2 - log_factorial(k) -
                          lgamma_pos(k + n + 1.0) + 0.5 * (ts - 2) * std::log(2.0) + lg;
        const double t = std::exp(lt);
        sum += t;
        if (k > a * a / 4.0 + 4 && t < sum * kEps) break;
    }
    return sum;
}

}  // namespace

double nuttall_q(int m, int n, double a, double b) {
    if (m < 0 || n < 0) throw std::domain_error("nuttall_q: orders must be nonnegative");
    if (a < 0.0 || b < 0.0) throw std::domain_error("nuttall_q: arguments must be nonnegative");
    if ((m + n) % 2 == 0 || a == 0.0) return nuttall_series(m, n, a, b);
    // Odd m+n: finite ladder seeded by the Marcum Q.
    //   Q_{j,0} = b^{j-1} I0(ab) E + (j-1) Q_{j-2,0} + a Q_{j-1,1}
    //   Q_{j,1} = b^{j-1} I1(ab) E + (j-2) Q_{j-2,1} + a Q_{j-1,0}
    // with E = exp(-(a^2+b^2)/2), Q_{1,0} = marcum_q1 and
    // Q_{0,1} = (Q_{1,0} - I0(ab) E) / a.
    if (n > 1) return nuttall_series(m, n, a, b);
    const double logE = -0.5 * (a * a + b * b);
    const double e0 = std::exp(logE + log_bessel_i(0, a * b));
    const double e1 = (a * b > 0.0) ? std::exp(logE + log_bessel_i(1, a * b)) : 0.0;
    auto bpow = [&](int j) { return (j == 0) ? 1.0 : std::pow(b, j); };
    // A[j] = Q_{j,0} on odd j, B[j] = Q_{j,1} on even j; every coefficient
    // in the recurrences is positive, so the upward march is stable.
    std::vector<double> A(m + 2, 0.0), B(m + 2, 0.0);
    A[1] = marcum_q1(a, b);
    B[0] = (A[1] - e0) / a;
    if (n == 0 && m == 1) return A[1];
    if (n == 1 && m == 0) return B[0];
    for (int j = 2; j <= m + 1; ++j) {
        if (j % 2 == 1) {
            A[j] = bpow(j - 1) * e0 + (j - 1) * A[j - 2] + a * B[j - 1];
        } else {
            B[j] = bpow(j - 1) * e1 + (j - 2) * B[j - 2] + a * A[j - 1];
        }
    }
    return (n == 0) ? A[m] : B[m];
}

double kummer_m(double a, double b, double z) {
    if (b <= 0.0 && b == std::floor(b)) {
        throw std::domain_error("kummer_m: b must not be a nonpositive integer");
    }
    if (z == 0.0) return 1.0;
    if (z < 0.0) {
        // M(a,b,z) = e^z M(b-a, b, -z); keeps the series single-signed
        // whenever b-a > 0, which covers every Laguerre use here.
        return std::exp(z) * kummer_m(b - a, b, -z);
    }
    double term = 1.0;
    double sum = 1.0;
    double ak = a;
    double bk = b;
    for (int k = 1; k < 4000; ++k) {
        term *= (ak / bk) * (z / k);
        sum += term;
        if (term == 0.0 || std::abs(term) < std::abs(sum) * kEps) break;
        ak += 1.0;
        bk += 1.0;
    }
    return sum;
}

double laguerre(double order, double x) {
    if (order < 0.0) throw std::domain_error("laguerre: order must be nonnegative");
    return kummer_m(-order, 1.0, x);
}

}  // namespace specfun
}  // namespace airis
