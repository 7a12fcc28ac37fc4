#include "airis/interference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "airis/moments.hpp"
#include "airis/specfun.hpp"

namespace airis {
namespace interference {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& logs) {
    double m = kNegInf;
    for (double v : logs) m = std::max(m, v);
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double v : logs) s += std::exp(v - m);
    return m + std::log(s);
}

// log D(s) = -s + sum_i [ -K_i + K_i/(1+g_i s) - log(1+g_i s) ]
double log_delta0(const std::vector<InterfererLink>& links, double s) {
    double lg = -s;
    for (const auto& l : links) {
        const double den = 1.0 + l.mean_inr * s;
        lg += -l.k_factor + l.k_factor / den - std::log(den);
    }
    return lg;
}

// log |S_i(s)|; all contributions share the sign (-1)^i, so magnitudes add.
double log_abs_s(int i, const std::vector<InterfererLink>& links, double s) {
    std::vector<double> logs;
    logs.reserve(links.size() + 1);
    for (const auto& l : links) {
        const double den = 1.0 + l.mean_inr * s;
        logs.push_back(specfun::log_factorial(i - 1) +
                       i * (std::log(l.mean_inr) - std::log(den)) +
                       std::log1p(i * l.k_factor / den));
    }
    if (i == 1) logs.push_back(0.0);  // the e^{-s} factor contributes -1
    return log_sum_exp(logs);
}

}  // namespace

std::vector<InterfererLink> InterfererSet::all() const {
    std::vector<InterfererLink> v = aerial;
    v.insert(v.end(), ground.begin(), ground.end());
    return v;
}

double laplace_inr(double k_factor, double mean_inr, double s) {
    if (s < 0.0) throw std::domain_error("laplace_inr: s must be nonnegative");
    const double den = 1.0 + mean_inr * s;
    return std::exp(-k_factor + k_factor / den) / den;
}

double delta_term(int i, double k_factor, double mean_inr, double s) {
    if (i < 1) throw std::domain_error("delta_term: order must be >= 1");
    const double den = 1.0 + mean_inr * s;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(specfun::log_factorial(i - 1) +
                           i * (std::log(mean_inr) - std::log(den)) +
                           std::log1p(i * k_factor / den));
}

double s_aggregate(int i, const InterfererSet& set, double s) {
    if (i < 1) throw std::domain_error("s_aggregate: order must be >= 1");
    double total = 0.0;
    for (const auto& l : set.all()) total += delta_term(i, l.k_factor, l.mean_inr, s);
    if (i == 1) total -= 1.0;
    return total;
}

double delta_n(int n, const InterfererSet& set, double s, int max_order) {
    if (n < 0) throw std::domain_error("delta_n: order must be >= 0");
    if (n > max_order) {
        throw std::domain_error("delta_n: order exceeds the configured cap");
    }
    const auto links = set.all();
    const double log_d0 = log_delta0(links, s);
    if (n == 0) return std::exp(log_d0);

    // Every partition term carries the sign (-1)^n, so the sum over
    // partitions is single-signed and can be accumulated as magnitudes.
    std::vector<double> log_s(n + 1, kNegInf);
    for (int i = 1; i <= n; ++i) log_s[i] = log_abs_s(i, links, s);

    const auto& table = moments::partitions_of(n);
    std::vector<double> log_terms;
    const double log_nfac = specfun::log_factorial(n);
    for (int r = 1; r <= n; ++r) {
        for (const auto& sig : table[r - 1]) {
            double lt = log_nfac + sig.log_multinomial + sig.log_perm_correction;
            for (const auto& [value, mult] : sig.distinct) lt += mult * log_s[value];
            log_terms.push_back(lt);
        }
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_d0 + log_sum_exp(log_terms));
}

double interference_moment(int k, const InterfererSet& set) {
    if (k < 0) throw std::domain_error("interference_moment: k must be >= 0");
    return std::exp(log_interference_moments(set, k)[static_cast<std::size_t>(k)]);
}

std::vector<double> log_interference_moments(const InterfererSet& set, int n_max) {
    if (n_max < 0) throw std::domain_error("log_interference_moments: n_max must be >= 0");
    const auto links = set.all();
    // V_n = mu_n / n! obeys V_{n+1} = 1/(n+1) sum_k v_{k+1} V_{n-k} with
    // v_j = (-1)^j S_j(0)/(j-1)! = 1{j=1} + sum_i g_i^j (1 + j K_i) > 0.
    std::vector<double> log_v(n_max + 2, kNegInf);
    for (int j = 1; j <= n_max + 1; ++j) {
        std::vector<double> logs;
        logs.reserve(links.size() + 1);
        for (const auto& l : links) {
            logs.push_back(j * std::log(l.mean_inr) + std::log1p(j * l.k_factor));
        }
        if (j == 1) logs.push_back(0.0);
        log_v[j] = log_sum_exp(logs);
    }
    std::vector<double> log_V(n_max + 1, kNegInf);
    log_V[0] = 0.0;  // V_0 = D(0) = 1
    std::vector<double> scratch;
    for (int n = 0; n < n_max; ++n) {
        scratch.clear();
        for (int k = 0; k <= n; ++k) scratch.push_back(log_v[k + 1] + log_V[n - k]);
        log_V[n + 1] = log_sum_exp(scratch) - std::log(n + 1.0);
    }
    std::vector<double> log_mu(n_max + 1);
    for (int n = 0; n <= n_max; ++n) log_mu[n] = specfun::log_factorial(n) + log_V[n];
    return log_mu;
}

ScaledDerivativeSeries scaled_derivative_series(const InterfererSet& set, double s0,
                                                int min_terms, int hard_cap) {
    if (s0 < 0.0) throw std::domain_error("scaled_derivative_series: s0 must be >= 0");
    ScaledDerivativeSeries out;
    const auto links = set.all();
    if (s0 == 0.0) {
        out.t.assign(std::max(min_terms, 1), 0.0);
        out.t[0] = 1.0;
        out.residual = 0.0;
        return out;
    }
    const double t0 = std::exp(log_delta0(links, s0));
    if (t0 < 1e-300) {
        // All mass sits at derivative orders far beyond any usable prefix.
        out.t.assign(std::max(min_terms, 1), 0.0);
        out.residual = 1.0;
        return out;
    }
    // u_j = (-s0)^j S_j(s0) / (j-1)!
    //     = s0 * 1{j=1} + sum_i r_i^j (1 + j K_i/(1+g_i s0)),  r_i in [0,1).
    struct Rk {
        double r;
        double kden;
    };
    std::vector<Rk> rk;
    rk.reserve(links.size());
    for (const auto& l : links) {
        const double den = 1.0 + l.mean_inr * s0;
        rk.push_back({l.mean_inr * s0 / den, l.k_factor / den});
    }
    std::vector<double> u;  // u[j-1] = u_j
    std::vector<double> rpow(rk.size(), 1.0);
    auto extend_u = [&](int j) {
        while (static_cast<int>(u.size()) < j) {
            const int jj = static_cast<int>(u.size()) + 1;
            double val = (jj == 1) ? s0 : 0.0;
            for (std::size_t i = 0; i < rk.size(); ++i) {
                rpow[i] *= rk[i].r;
                val += rpow[i] * (1.0 + jj * rk[i].kden);
            }
            u.push_back(val);
        }
    };
    out.t.push_back(t0);
    double cum = t0;
    double head_cum = -1.0;  // mass inside the first min_terms terms
    int n = 0;
    while (true) {
        if (n + 1 >= hard_cap) break;
        if (n + 1 >= min_terms) {
            if (head_cum < 0.0) head_cum = cum;
            // Converged: essentially all mass is accounted for.
            if (1.0 - cum <= 1e-16) break;
            const double tn = out.t[static_cast<std::size_t>(n)];
            const double tp = out.t[static_cast<std::size_t>(n - 1)];
            // Tail decayed to numerical irrelevance.
            if (tn < 1e-18 * std::max(cum, 1e-300) && tn <= tp) break;
            // Mass sits far beyond the head; the 1 - cum residual already
            // lands in every tail exactly, so marching on buys nothing.
            if (head_cum < 1e-18 && tn > tp) break;
        }
        extend_u(n + 1);
        double acc = 0.0;
        for (int k = 0; k <= n; ++k) acc += u[static_cast<std::size_t>(k)] * out.t[n - k];
        const double tn1 = acc / (n + 1.0);
        out.t.push_back(tn1);
        cum += tn1;
        ++n;
    }
    out.residual = std::max(0.0, 1.0 - cum);
    if (static_cast<int>(out.t.size()) < min_terms) out.t.resize(min_terms, 0.0);
    return out;
}

}  // namespace interference
}  // namespace airis
