#include "airis/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "airis/channel.hpp"
#include "airis/specfun.hpp"

namespace airis {
namespace analytic {

namespace {

// F(x) = sum_k chi_k * sum_{n >= Ipsi-k} T_n(s0), the complementary form of
// the double sum, so small CDF values keep relative accuracy.
double mixture_cdf(const sisr::SisrParams& fit, double alpha,
                   const interference::InterfererSet& set, double s0) {
    if (s0 <= 0.0) return 0.0;
    (void)alpha;
    const int ipsi = fit.count * fit.shape;
    const auto series = interference::scaled_derivative_series(set, s0, ipsi + 1);
    std::vector<double> suffix(series.t.size() + 1, 0.0);
    for (int n = static_cast<int>(series.t.size()) - 1; n >= 0; --n) {
        suffix[n] = suffix[n + 1] + series.t[static_cast<std::size_t>(n)];
    }
    double f = 0.0;
    for (int k = 0; k < static_cast<int>(fit.chi.size()); ++k) {
        const int start = ipsi - k;  // first term outside the head sum
        const double tail =
            (start < static_cast<int>(suffix.size()) ? suffix[start] : 0.0) + series.residual;
        f += fit.chi[static_cast<std::size_t>(k)] * tail;
    }
    return std::clamp(f, 0.0, 1.0);
}

double mixture_cdf_asymptotic(const sisr::SisrParams& fit,
                              const interference::InterfererSet& set, double s0) {
    if (s0 <= 0.0) return 0.0;
    const int ipsi = fit.count * fit.shape;
    const auto log_mu = interference::log_interference_moments(set, ipsi);
    const double ls = std::log(s0);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(fit.chi.size());
    for (int k = 0; k < static_cast<int>(fit.chi.size()); ++k) {
        if (fit.chi[static_cast<std::size_t>(k)] <= 0.0) continue;
        const int order = ipsi - k;
        const double lt = std::log(fit.chi[static_cast<std::size_t>(k)]) +
                          log_mu[static_cast<std::size_t>(order)] + order * ls -
                          specfun::log_factorial(order);
        logs.push_back(lt);
        best = std::max(best, lt);
    }
    if (logs.empty() || best == -std::numeric_limits<double>::infinity()) return 0.0;
    double sum = 0.0;
    for (double lt : logs) sum += std::exp(lt - best);
    return std::exp(best) * sum;
}

}  // namespace

std::pair<double, double> markov_steady_state(const std::array<std::array<double, 2>, 2>& p) {
    for (int i = 0; i < 2; ++i) {
        if (std::abs(p[i][0] + p[i][1] - 1.0) > 1e-9 || p[i][0] < 0.0 || p[i][1] < 0.0) {
            throw std::domain_error("markov_steady_state: matrix is not row-stochastic");
        }
    }
    const double denom = p[0][1] + p[1][0];
    if (denom <= 0.0) {
        throw std::domain_error("markov_steady_state: absorbing chain has no unique fixed point");
    }
    return {p[1][0] / denom, p[0][1] / denom};
}

double blockage_probability(double k_ud, double lambda_ud, double tau) {
    if (tau < 0.0) throw std::domain_error("blockage_probability: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    return 1.0 -
           specfun::marcum_q1(std::sqrt(2.0 * k_ud), std::sqrt(2.0 * lambda_ud * tau));
}

double threshold_for_beta(double k_ud, double lambda_ud, double beta) {
    if (beta < 0.0 || beta > 1.0) throw std::domain_error("threshold_for_beta: beta in [0,1]");
    if (beta == 0.0) return 0.0;
    if (beta >= 1.0 - 1e-14) return std::numeric_limits<double>::infinity();
    double lo = 0.0;
    double hi = (2.0 * k_ud + 40.0 * std::sqrt(k_ud + 1.0) + 40.0) / (2.0 * lambda_ud);
    while (blockage_probability(k_ud, lambda_ud, hi) < beta) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (blockage_probability(k_ud, lambda_ud, mid) < beta) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

BlockageModel blockage_from_beta(double k_ud, double lambda_ud, double beta) {
    BlockageModel b;
    b.beta = beta;
    b.tau = threshold_for_beta(k_ud, lambda_ud, beta);
    b.transition = {{{beta, 1.0 - beta}, {beta, 1.0 - beta}}};
    b.pi0 = beta;
    b.pi1 = 1.0 - beta;
    return b;
}

BlockageModel blockage_from_tau(double k_ud, double lambda_ud, double tau) {
    BlockageModel b;
    b.tau = tau;
    b.beta = blockage_probability(k_ud, lambda_ud, tau);
    b.transition = {{{b.beta, 1.0 - b.beta}, {b.beta, 1.0 - b.beta}}};
    b.pi0 = b.beta;
    b.pi1 = 1.0 - b.beta;
    return b;
}

BlockageModel blockage_from_transition(const std::array<std::array<double, 2>, 2>& p,
                                       double k_ud, double lambda_ud, double tau) {
    BlockageModel b;
    b.transition = p;
    const auto [pi0, pi1] = markov_steady_state(p);
    b.pi0 = pi0;
    b.pi1 = pi1;
    b.tau = tau;
    b.beta = blockage_probability(k_ud, lambda_ud, tau);
    return b;
}

moments::MomentTable cascade_element_table(double k_ur, double k_rd, int max_order) {
    moments::MomentTable t;
    for (int i = 1; i <= max_order; ++i) {
        t.set(i, channel::power_moment(i / 2.0, k_ur) * channel::power_moment(i / 2.0, k_rd));
    }
    return t;
}

moments::MomentTable cascade_moment_table(int element_count, double k_ur, double k_rd,
                                          int max_two_k) {
    const auto element = cascade_element_table(k_ur, k_rd, max_two_k);
    moments::MomentTable t;
    t.set(0.0, 1.0);
    for (int two_k = 1; two_k <= max_two_k; ++two_k) {
        t.set(two_k / 2.0, moments::cascade_moment(two_k, element_count, element));
    }
    return t;
}

moments::MomentTable direct_moment_table(double k_ud, double lambda_ud,
                                         const BlockageModel& blockage, double scale,
                                         int max_two_k) {
    moments::MomentTable t;
    for (int two_k = 0; two_k <= max_two_k; ++two_k) {
        t.set(two_k / 2.0,
              moments::truncated_direct_moment(two_k / 2.0, k_ud, lambda_ud, blockage.tau,
                                               blockage.pi1, blockage.beta, scale));
    }
    return t;
}

sisr::SisrParams fit_g2a_snr(int antenna_count, double k_su, int psi) {
    moments::MomentTable per_antenna;
    per_antenna.set(1.0, 1.0);
    per_antenna.set(2.0, channel::power_moment(2.0, k_su));
    const double mu1 = static_cast<double>(antenna_count);
    const double mu2 = moments::sum_power_moment(2, antenna_count, per_antenna);
    return sisr::fit_sisr(mu1, mu2, antenna_count, psi);
}

sisr::SisrParams fit_a2g_snr(int element_count, double k_ur, double k_rd, double k_ud,
                             double lambda_ud, const BlockageModel& blockage,
                             double dir_scale, int psi, int fit_order) {
    const auto cas = cascade_moment_table(element_count, k_ur, k_rd, 4);
    const auto dir = direct_moment_table(k_ud, lambda_ud, blockage, dir_scale, 4);
    const double mu1 = moments::a2g_combined_moment(1, cas, dir);
    const double mu2 = moments::a2g_combined_moment(2, cas, dir);
    int count = fit_order;
    if (count <= 0) {
        count = std::min({sisr::max_feasible_count(mu1, mu2), element_count,
                          std::max(1, 256 / psi)});
    }
    if (count < 1) {
        throw sisr::FitError("fit_a2g_snr: no feasible component count for these moments");
    }
    return sisr::fit_sisr(mu1, mu2, count, psi);
}

double cdf_g2a(const LinkBudget& budget, double x) {
    if (x <= 0.0) return 0.0;
    const double s0 = x / (budget.fit_g2a.alpha * budget.g2a_mean_snr);
    return mixture_cdf(budget.fit_g2a, budget.fit_g2a.alpha, budget.interferers_u, s0);
}

double cdf_a2g(const LinkBudget& budget, const BlockageModel& blockage, double x) {
    (void)blockage;  // already folded into fit_a2g's moments
    if (x <= 0.0) return 0.0;
    const double alpha =
        budget.strict_paper_alpha ? budget.alpha_cas_only : budget.fit_a2g.alpha;
    const double s0 = x / (alpha * budget.cas_mean_snr);
    return mixture_cdf(budget.fit_a2g, alpha, budget.interferers_d, s0);
}

double cdf_g2a_asymptotic(const LinkBudget& budget, double x) {
    if (x <= 0.0) return 0.0;
    const double s0 = x / (budget.fit_g2a.alpha * budget.g2a_mean_snr);
    return mixture_cdf_asymptotic(budget.fit_g2a, budget.interferers_u, s0);
}

double cdf_a2g_asymptotic(const LinkBudget& budget, const BlockageModel& blockage, double x) {
    (void)blockage;
    if (x <= 0.0) return 0.0;
    const double alpha =
        budget.strict_paper_alpha ? budget.alpha_cas_only : budget.fit_a2g.alpha;
    const double s0 = x / (alpha * budget.cas_mean_snr);
    return mixture_cdf_asymptotic(budget.fit_a2g, budget.interferers_d, s0);
}

double e2e_threshold(double rate_se) {
    if (rate_se <= 0.0) throw std::domain_error("e2e_threshold: rate must be positive");
    return std::exp2(rate_se) - 1.0;
}

double outage_e2e(const LinkBudget& budget, const BlockageModel& blockage, double rate_se) {
    const double tau = e2e_threshold(rate_se);
    const double f1 = cdf_g2a(budget, tau);
    const double f2 = cdf_a2g(budget, blockage, tau);
    return 1.0 - (1.0 - f1) * (1.0 - f2);
}

}  // namespace analytic
}  // namespace airis
