#ifndef AIRIS_SPECFUN_HPP
#define AIRIS_SPECFUN_HPP

// Self-contained special-function kernel. Everything here is a pure,
// reentrant map over real scalars; no global state.

namespace airis {
namespace specfun {

// Modified Bessel function of the first kind, integer order >= 0.
// Power series for small arguments, Hankel-type asymptotic expansion for
// large ones; relative error <= 1e-12 on x in [0, 700] for orders 0 and 1.
double bessel_i(int order, double x);
double bessel_i0(double x);
double bessel_i1(double x);

// log I_nu(x), usable where exp-combined expressions would overflow.
double log_bessel_i(int order, double x);

// Regularized incomplete gamma functions P(a,x) = gamma(a,x)/Gamma(a) and
// Q(a,x) = 1 - P(a,x). Series for x < a+1, Lentz continued fraction beyond.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Unregularized lower incomplete gamma(a,x). Overflows for a > ~171; use
// gamma_p when a ratio against Gamma(a) is what is actually needed.
double lower_incomplete_gamma(double a, double x);

// Unregularized upper incomplete Gamma(s,x) for s a positive multiple of
// 1/2, by stable upward recurrence from Gamma(1/2,x) / Gamma(1,x).
double upper_gamma_half(int twice_s, double x);

// First-order Marcum Q: Q(a,b) = int_b^inf x exp(-(x^2+a^2)/2) I0(ax) dx.
double marcum_q1(double a, double b);

// Unnormalized Nuttall Q: Q_{m,n}(a,b) = int_b^inf x^m exp(-(x^2+a^2)/2) I_n(ax) dx.
// m >= 0, n >= 0 integers. Marcum-seeded ladder when m+n is odd, Bessel
// series with incomplete-gamma tails otherwise.
double nuttall_q(int m, int n, double a, double b);

// Confluent hypergeometric 1F1(a; b; z). Kummer's transformation is applied
// for z < 0 so the series keeps one sign.
double kummer_m(double a, double b, double z);

// Laguerre function L_nu(x) = 1F1(-nu; 1; x); nu >= 0, integer or not.
double laguerre(double order, double x);

// log Gamma for strictly positive argument (thin wrapper, kept here so the
// kernel has a single gamma entry point).
double lgamma_pos(double a);

// log(n!) with a cached table for small n.
double log_factorial(int n);

}  // namespace specfun
}  // namespace airis

#endif
