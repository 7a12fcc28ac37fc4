#include "airis/sisr.hpp"

#include <cmath>

#include "airis/specfun.hpp"

namespace airis {
namespace sisr {

namespace {

// log C(n, k)
double log_binom(int n, int k) {
    return specfun::log_factorial(n) - specfun::log_factorial(k) - specfun::log_factorial(n - k);
}

}  // namespace

int max_feasible_count(double mu1, double mu2) {
    const double excess = mu2 - mu1 * mu1;
    if (excess <= 0.0) return 0;
    return static_cast<int>(std::floor(mu1 * mu1 / excess));
}

SisrParams fit_sisr(double mu1, double mu2, int count, int shape) {
    if (!(mu1 > 0.0)) throw FitError("fit_sisr: mu1 must be positive");
    if (shape < 2) throw FitError("fit_sisr: shape psi must be an integer >= 2");
    if (count < 1) throw FitError("fit_sisr: count I must be >= 1");
    if (!(mu2 > mu1 * mu1)) throw FitError("fit_sisr: mu2 must exceed mu1^2");
    if (count > max_feasible_count(mu1, mu2)) {
        throw FitError("fit_sisr: count I exceeds floor(mu1^2 / (mu2 - mu1^2))");
    }
    double disc = mu1 * mu1 * (count + 1) - count * mu2;
    if (disc < 0.0) {
        if (disc > -1e-12 * mu1 * mu1) {
            disc = 0.0;  // I at the feasibility edge, rounding only
        } else {
            throw FitError("fit_sisr: mu1^2 (I+1) - I mu2 is negative");
        }
    }

    SisrParams p;
    p.count = count;
    p.shape = shape;
    p.omega = std::sqrt(disc) * std::sqrt(shape / (shape - 1.0)) / count;
    p.sigma2 = mu1 / count - p.omega;  // keeps I (Omega + sigma2) = mu1 exact
    if (!(p.sigma2 > 0.0)) {
        throw FitError("fit_sisr: scatter power sigma^2 came out nonpositive; "
                       "increase psi or reduce I");
    }
    p.kappa = (1.0 - p.sigma2) / p.sigma2;
    // xi and alpha through forms that stay valid when kappa <= 0
    // (kappa * omega_sr reduces to Omega / sigma2 identically).
    p.xi = p.omega / (shape * p.sigma2);
    p.alpha = p.omega / shape + p.sigma2;
    p.omega_sr = (p.kappa != 0.0) ? p.omega * (p.kappa + 1.0) / p.kappa : 0.0;

    const int b = count * shape - count;
    const double q = 1.0 / (p.xi + 1.0);  // weight on the k exponent
    p.chi.assign(b + 1, 0.0);
    if (p.xi == 0.0) {
        p.chi[b] = 1.0;  // 0^0 = 1 convention: all mass on k = B
    } else {
        const double lq = std::log(q);
        const double l1q = std::log(p.xi) - std::log(p.xi + 1.0);
        for (int k = 0; k <= b; ++k) {
            p.chi[k] = std::exp(log_binom(b, k) + k * lq + (b - k) * l1q);
        }
    }
    return p;
}

double sisr_pdf(const SisrParams& p, double x) {
    if (x <= 0.0) return 0.0;
    const int ipsi = p.count * p.shape;
    const double lx = std::log(x);
    const double la = std::log(p.alpha);
    double f = 0.0;
    for (int k = 0; k < static_cast<int>(p.chi.size()); ++k) {
        if (p.chi[k] <= 0.0) continue;
        const int n = ipsi - k;  // gamma shape of this component
        f += p.chi[k] * std::exp((n - 1) * lx - n * la - x / p.alpha -
                                 specfun::log_factorial(n - 1));
    }
    return f;
}

double sisr_cdf(const SisrParams& p, double x) {
    if (x <= 0.0) return 0.0;
    const int ipsi = p.count * p.shape;
    const double y = x / p.alpha;
    // F = 1 - sum_k chi_k sum_{n=0}^{Ipsi-k-1} y^n e^{-y} / n!
    // Accumulate Poisson terms once; each chi_k consumes a prefix.
    const int nmax = ipsi - 1;
    double term = std::exp(-y);  // n = 0
    double head = 0.0;
    std::vector<double> prefix(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) term *= y / n;
        head += term;
        prefix[n] = head;
    }
    double sum = 0.0;
    for (int k = 0; k < static_cast<int>(p.chi.size()); ++k) {
        sum += p.chi[k] * prefix[ipsi - k - 1];
    }
    double f = 1.0 - sum;
    if (f < 0.0) f = 0.0;
    if (f > 1.0) f = 1.0;
    return f;
}

double sisr_cdf_gamma_form(const SisrParams& p, double x) {
    if (x <= 0.0) return 0.0;
    const int ipsi = p.count * p.shape;
    const double y = x / p.alpha;
    // Same quantity with the incomplete-gamma tail spelled out:
    // each prefix above is the regularized upper gamma Q(Ipsi-k, y).
    double sum = 0.0;
    for (int k = 0; k < static_cast<int>(p.chi.size()); ++k) {
        if (p.chi[k] <= 0.0) continue;
        sum += p.chi[k] * specfun::gamma_q(static_cast<double>(ipsi - k), y);
    }
    return 1.0 - sum;
}

double sisr_cdf_small_x(const SisrParams& p, double x) {
    if (x <= 0.0) return 0.0;
    const int ipsi = p.count * p.shape;
    const double ly = std::log(x / p.alpha);
    double f = 0.0;
    for (int k = 0; k < static_cast<int>(p.chi.size()); ++k) {
        if (p.chi[k] <= 0.0) continue;
        const int n = ipsi - k;
        f += p.chi[k] * std::exp(n * ly - specfun::log_factorial(n));
    }
    return f;
}

double sample_sisr(const SisrParams& p, rng::Stream& stream) {
    const double sd = std::sqrt(p.sigma2 / 2.0);
    double total = 0.0;
    for (int i = 0; i < p.count; ++i) {
        double los = 0.0;
        if (p.omega > 0.0) {
            // Nakagami(psi, Omega) amplitude == sqrt(Gamma(psi, Omega/psi))
            los = std::sqrt(stream.next_gamma(p.shape, p.omega / p.shape));
        }
        const double re = los + sd * stream.next_normal();
        const double im = sd * stream.next_normal();
        total += re * re + im * im;
    }
    return total;
}

double mixture_moment1(const SisrParams& p) {
    const int ipsi = p.count * p.shape;
    double m = 0.0;
    for (int k = 0; k < static_cast<int>(p.chi.size()); ++k) {
        m += p.chi[k] * p.alpha * (ipsi - k);
    }
    return m;
}

double mixture_moment2(const SisrParams& p) {
    const int ipsi = p.count * p.shape;
    double m = 0.0;
    for (int k = 0; k < static_cast<int>(p.chi.size()); ++k) {
        const double n = ipsi - k;
        m += p.chi[k] * p.alpha * p.alpha * n * (n + 1.0);
    }
    return m;
}

}  // namespace sisr
}  // namespace airis
