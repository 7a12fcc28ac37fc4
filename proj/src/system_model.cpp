#include "airis/system_model.hpp"

namespace airis {

analytic::LinkBudget make_budget(const SystemModel& m) {
    analytic::LinkBudget b;
    b.g2a_mean_snr = m.g2a_mean_snr;
    b.cas_mean_snr = m.cas_mean_snr;
    b.dir_mean_snr = m.dir_mean_snr;
    b.antenna_count = m.antennas;
    b.element_count = m.elements;
    b.interferers_u = m.interferers_u;
    b.interferers_d = m.interferers_d;
    b.strict_paper_alpha = m.strict_paper_alpha;
    b.fit_g2a = analytic::fit_g2a_snr(m.antennas, m.k_su, m.psi_g2a);
    if (m.ris_enabled) {
        b.fit_a2g = analytic::fit_a2g_snr(m.elements, m.k_ur, m.k_rd, m.k_ud, m.lambda_ud,
                                          m.blockage, m.dir_scale(), m.psi_a2g,
                                          m.a2g_fit_order);
        // Cascade-only fit scale, kept around for the strict evaluation mode.
        const auto cas = analytic::cascade_moment_table(m.elements, m.k_ur, m.k_rd, 4);
        const double c1 = cas.at(1.0);
        const double c2 = cas.at(2.0);
        const int count = std::min({sisr::max_feasible_count(c1, c2), m.elements,
                                    std::max(1, 256 / m.psi_a2g)});
        if (count >= 1) {
            b.alpha_cas_only = sisr::fit_sisr(c1, c2, count, m.psi_a2g).alpha;
        } else {
            b.alpha_cas_only = b.fit_a2g.alpha;
        }
    } else {
        // Without a surface the A2G SNR is the censored direct term alone;
        // fit it directly through the combined-moment route with a
        // point-mass cascade (all cascade moments zero above order 0).
        moments::MomentTable cas;
        cas.set(0.0, 1.0);
        for (int two_k = 1; two_k <= 4; ++two_k) cas.set(two_k / 2.0, 0.0);
        const auto dir = analytic::direct_moment_table(m.k_ud, m.lambda_ud, m.blockage,
                                                       m.dir_scale(), 4);
        const double mu1 = moments::a2g_combined_moment(1, cas, dir);
        const double mu2 = moments::a2g_combined_moment(2, cas, dir);
        const int count = std::max(1, std::min(sisr::max_feasible_count(mu1, mu2),
                                               std::max(1, 256 / m.psi_a2g)));
        b.fit_a2g = sisr::fit_sisr(mu1, mu2, count, m.psi_a2g);
        b.alpha_cas_only = b.fit_a2g.alpha;
    }
    return b;
}

}  // namespace airis
