#include "airis/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "airis/specfun.hpp"

namespace airis {
namespace channel {

RicianLink::RicianLink(double k, double g) : k_factor(k), gain(g) {
    if (k < 0.0) throw std::domain_error("RicianLink: K must be nonnegative");
    if (g <= 0.0) throw std::domain_error("RicianLink: gain must be positive");
    rate = (k + 1.0) / g;
}

double power_gain_pdf(const RicianLink& link, double z) {
    if (z <= 0.0) return 0.0;
    const double lam = link.rate;
    const double k = link.k_factor;
    const double log_f = std::log(lam) - lam * z - k +
                         specfun::log_bessel_i(0, 2.0 * std::sqrt(k * lam * z));
    return std::exp(log_f);
}

double power_gain_cdf(const RicianLink& link, double z) {
    if (z <= 0.0) return 0.0;
    return 1.0 - specfun::marcum_q1(std::sqrt(2.0 * link.k_factor),
                                    std::sqrt(2.0 * link.rate * z));
}

double power_moment(double k, double k_factor) {
    if (k < 0.0) throw std::domain_error("power_moment: order must be nonnegative");
    if (k == 0.0) return 1.0;
    return std::exp(specfun::lgamma_pos(1.0 + k) - k * std::log1p(k_factor)) *
           specfun::laguerre(k, -k_factor);
}

std::complex<double> sample_fading(const RicianLink& link, rng::Stream& stream,
                                   double los_phase) {
    const double k = link.k_factor;
    const double inv = 1.0 / std::sqrt(k + 1.0);
    const std::complex<double> los = std::polar(std::sqrt(k), los_phase);
    const std::complex<double> scatter(stream.next_normal() * M_SQRT1_2,
                                       stream.next_normal() * M_SQRT1_2);
    return std::sqrt(link.gain) * inv * (los + scatter);
}

double sample_fading_power(double k_factor, rng::Stream& stream) {
    const double re = std::sqrt(k_factor) + stream.next_normal() * M_SQRT1_2;
    const double im = stream.next_normal() * M_SQRT1_2;
    return (re * re + im * im) / (k_factor + 1.0);
}

}  // namespace channel
}  // namespace airis
