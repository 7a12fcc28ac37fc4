#ifndef AIRIS_SYSTEM_MODEL_HPP
#define AIRIS_SYSTEM_MODEL_HPP

#include "airis/analytic.hpp"
#include "airis/geometry.hpp"
#include "airis/interference.hpp"

// Scenario-derived physical quantities shared by the closed forms and the
// Monte Carlo simulator: every K-factor, mean SNR/INR, and the blockage
// model, all in linear units.

namespace airis {

struct SystemModel {
    int antennas = 1;      // M
    int elements = 1;      // N
    bool ris_enabled = true;

    double k_su = 1.0;
    double k_ur = 1.0;
    double k_rd = 1.0;
    double k_ud = 1.0;

    double g2a_mean_snr = 1.0;  // P_S l_SU / sigma_U^2
    double cas_mean_snr = 1.0;  // P_U l_UR l_RD kappa^2 / sigma_D^2
    double dir_mean_snr = 1.0;  // P_U l_UD / sigma_D^2

    double ell_ud = 1.0;      // path-loss gain of the direct A2G link
    double lambda_ud = 1.0;   // (K_UD + 1) / ell_ud

    interference::InterfererSet interferers_u;
    interference::InterfererSet interferers_d;

    analytic::BlockageModel blockage;
    bool explicit_chain = false;  // true when a user transition matrix drives phi

    int psi_g2a = 4;
    int psi_a2g = 4;
    int a2g_fit_order = 0;  // 0 = auto
    bool strict_paper_alpha = false;

    double rate_se = 0.5;

    // Geometry retained for the phase-alignment diagnostic.
    geom::Position3D pos_u, pos_r, pos_d;
    geom::MobilityState mobility;

    // gamma = gamma_dir * dir_mean_snr / cas_mean_snr in units of the
    // censored power gain: scale = dir_mean_snr / (ell_ud * cas_mean_snr).
    double dir_scale() const { return dir_mean_snr / (ell_ud * cas_mean_snr); }
};

namespace analytic {}  // (budget assembly lives in analytic_budget below)

// Build the closed-form budget from the derived model.
analytic::LinkBudget make_budget(const SystemModel& model);

}  // namespace airis

#endif
