#ifndef AIRIS_ANALYTIC_HPP
#define AIRIS_ANALYTIC_HPP

#include <array>

#include "airis/interference.hpp"
#include "airis/moments.hpp"
#include "airis/sisr.hpp"

// Top-level closed forms: the G2A and A2G SINR CDFs, their high-power
// asymptotics, blockage probability, Markov steady state, and the
// end-to-end outage probability.

namespace airis {
namespace analytic {

struct BlockageModel {
    std::array<std::array<double, 2>, 2> transition{{{0.0, 1.0}, {0.0, 1.0}}};
    double pi0 = 0.0;  // steady-state blocked probability
    double pi1 = 1.0;
    double beta = 0.0;  // Pr(|g_UD|^2 < tau)
    double tau = 0.0;   // power-gain threshold
};

// pi0 = p10/(p01+p10), pi1 = p01/(p01+p10). Degenerate chains with
// p01 = p10 = 0 are rejected.
std::pair<double, double> markov_steady_state(const std::array<std::array<double, 2>, 2>& p);

// beta = 1 - MarcumQ1(sqrt(2 K), sqrt(2 lambda tau)).
double blockage_probability(double k_ud, double lambda_ud, double tau);

// Inverse of the above in tau (bisection; beta in [0,1)). beta >= 1 maps to
// an effectively infinite threshold.
double threshold_for_beta(double k_ud, double lambda_ud, double beta);

// Chain with both rows (beta, 1-beta): blockage events are IID and
// pi0 = beta identically.
BlockageModel blockage_from_beta(double k_ud, double lambda_ud, double beta);
BlockageModel blockage_from_tau(double k_ud, double lambda_ud, double tau);
BlockageModel blockage_from_transition(const std::array<std::array<double, 2>, 2>& p,
                                       double k_ud, double lambda_ud, double tau);

struct LinkBudget {
    double g2a_mean_snr = 1.0;  // P_S l_SU / sigma_U^2
    double cas_mean_snr = 1.0;  // P_U l_UR l_RD kappa^2 / sigma_D^2
    double dir_mean_snr = 1.0;  // P_U l_UD / sigma_D^2
    int antenna_count = 1;      // M
    int element_count = 1;      // N
    sisr::SisrParams fit_g2a;
    sisr::SisrParams fit_a2g;
    double alpha_cas_only = 1.0;  // scale of a cascade-only fit (strict mode)
    bool strict_paper_alpha = false;
    interference::InterfererSet interferers_u;
    interference::InterfererSet interferers_d;
};

// Element amplitude-product moments E[Z^i], i = 1..max_order, for
// Z = |h_ur| |h_rd| of one reflecting element.
moments::MomentTable cascade_element_table(double k_ur, double k_rd, int max_order);

// gamma_cas moments at half-integer orders 0..max_two_k/2 for an
// element_count-element surface.
moments::MomentTable cascade_moment_table(int element_count, double k_ur, double k_rd,
                                          int max_two_k);

// Censored direct-link moments at half-integer orders (order 0 holds the
// censored mass pi1).
moments::MomentTable direct_moment_table(double k_ud, double lambda_ud,
                                         const BlockageModel& blockage, double scale,
                                         int max_two_k);

// Fit of the G2A array SNR gamma_g2a = sum_m |h_su|^2 with I = M.
sisr::SisrParams fit_g2a_snr(int antenna_count, double k_su, int psi);

// Fit of the normalized A2G SNR |sqrt(gamma_cas) + sqrt(gamma)|^2.
// fit_order 0 selects the largest feasible count capped at element_count
// and at 256/psi mixture terms.
sisr::SisrParams fit_a2g_snr(int element_count, double k_ur, double k_rd, double k_ud,
                             double lambda_ud, const BlockageModel& blockage,
                             double dir_scale, int psi, int fit_order);

// Theorem-style SINR CDFs. Both are valid CDFs on any grid: monotone,
// 0 at x <= 0, -> 1 as x -> infinity.
double cdf_g2a(const LinkBudget& budget, double x);
double cdf_a2g(const LinkBudget& budget, const BlockageModel& blockage, double x);

// High-transmit-power limits; the ratio to the exact CDF tends to 1.
double cdf_g2a_asymptotic(const LinkBudget& budget, double x);
double cdf_a2g_asymptotic(const LinkBudget& budget, const BlockageModel& blockage, double x);

// OP = 1 - (1 - F_g2a(tau_e2e)) (1 - F_a2g(tau_e2e)), tau_e2e = 2^rate - 1.
double outage_e2e(const LinkBudget& budget, const BlockageModel& blockage, double rate_se);
double e2e_threshold(double rate_se);

}  // namespace analytic
}  // namespace airis

#endif
