#ifndef AIRIS_CHANNEL_HPP
#define AIRIS_CHANNEL_HPP

#include <complex>

#include "airis/rng.hpp"

// Single-link Rician channel statistics: the noncentral-chi-square power
// gain law, its (possibly fractional) moments, and an exact sampler.

namespace airis {
namespace channel {

struct RicianLink {
    double k_factor = 0.0;  // linear K
    double gain = 1.0;      // linear path-loss gain
    double rate = 1.0;      // (K + 1) / gain

    RicianLink() = default;
    RicianLink(double k, double g);
};

// Power gain density f(z) = rate * exp(-rate z - K) * I0(2 sqrt(K rate z)),
// z > 0; evaluated in the log domain. Returns 0 for z <= 0.
double power_gain_pdf(const RicianLink& link, double z);

// P(|g|^2 <= z) = 1 - MarcumQ1(sqrt(2K), sqrt(2 rate z)).
double power_gain_cdf(const RicianLink& link, double z);

// k-th moment of the unit-path-loss fading power |h|^2:
//   Gamma(1+k) L_k(-K) / (1+K)^k,  k >= 0, integer or half-integer.
// Scale by gain^k externally to get moments of |g|^2.
double power_moment(double k, double k_factor);

// One draw of the complex channel coefficient g = sqrt(gain) h, where
// h = (sqrt(K) e^{j phi0} + CN(0,1)) / sqrt(K+1). E|g|^2 = gain.
std::complex<double> sample_fading(const RicianLink& link, rng::Stream& stream,
                                   double los_phase = 0.0);

// One draw of the fading power |h|^2 (unit path loss).
double sample_fading_power(double k_factor, rng::Stream& stream);

}  // namespace channel
}  // namespace airis

#endif
