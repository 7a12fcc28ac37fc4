#ifndef AIRIS_SISR_HPP
#define AIRIS_SISR_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "airis/rng.hpp"

// Sum-of-independent-shadowed-Rician matching: fit the family to a target
// positive RV from its first two moments, evaluate the resulting
// gamma-mixture PDF/CDF, and sample the physical construction for
// validation.

namespace airis {
namespace sisr {

struct SisrParams {
    int count = 1;        // I, number of summed components
    int shape = 4;        // psi, Nakagami shape of the LoS amplitude
    double omega = 0.0;   // Omega, Nakagami spread
    double sigma2 = 1.0;  // scatter power per component
    double kappa = 0.0;   // (1 - sigma2) / sigma2; negative when sigma2 > 1
    double omega_sr = 0.0;  // omega = Omega (kappa+1)/kappa, informational
    double xi = 0.0;        // kappa * omega / psi = Omega / (psi sigma2)
    double alpha = 1.0;     // (xi + 1) / (kappa + 1) = Omega/psi + sigma2
    std::vector<double> chi;  // I*psi - I + 1 binomial mixture weights

    int mixture_terms() const { return count * shape - count + 1; }
};

class FitError : public std::runtime_error {
  public:
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

// Moment-matched fit: the returned mixture has first and second moments
// exactly (mu1, mu2). Requires shape > 1, mu2 > mu1^2,
// count <= floor(mu1^2 / (mu2 - mu1^2)) and a positive scatter solution;
// violations raise FitError naming the constraint.
SisrParams fit_sisr(double mu1, double mu2, int count, int shape);

// Largest feasible component count for a (mu1, mu2) target.
int max_feasible_count(double mu1, double mu2);

double sisr_pdf(const SisrParams& p, double x);

// CDF via the finite exponential sum; agrees with the incomplete-gamma
// form to 1e-12 (see sisr_cdf_gamma_form).
double sisr_cdf(const SisrParams& p, double x);
double sisr_cdf_gamma_form(const SisrParams& p, double x);

// Leading-order expansion near zero; ratio to the exact CDF -> 1 as x -> 0.
// The dominant exponent is `count`.
double sisr_cdf_small_x(const SisrParams& p, double x);

// Draw from the physical construction: sum of I terms
// (P + xi_n)^2 + Q^2 with P,Q ~ N(0, sigma2/2) and xi_n Nakagami(shape, Omega).
double sample_sisr(const SisrParams& p, rng::Stream& stream);

// Closed-form first / second moments of the fitted mixture.
double mixture_moment1(const SisrParams& p);
double mixture_moment2(const SisrParams& p);

}  // namespace sisr
}  // namespace airis

#endif
