#ifndef AIRIS_INTERFERENCE_HPP
#define AIRIS_INTERFERENCE_HPP

#include <vector>

// Non-IID co-channel interference machinery: per-interferer Laplace
// transforms, their logarithmic-derivative building blocks, aggregates,
// and the n-th derivative expansion of the joint transform
//   D(s) = e^{-s} prod_i L_i(s),   L the transform of one INR term.

namespace airis {
namespace interference {

struct InterfererLink {
    double k_factor = 0.0;  // linear Rician K of the interferer channel
    double mean_inr = 0.0;  // mean interference-to-noise ratio, linear
};

enum class Node { U, D };

struct InterfererSet {
    std::vector<InterfererLink> aerial;
    std::vector<InterfererLink> ground;
    Node node = Node::U;

    std::vector<InterfererLink> all() const;
    bool empty() const { return aerial.empty() && ground.empty(); }
};

// Laplace transform of one unit-power Rician INR term:
//   L(s) = exp(-K + K/(1 + gbar s)) / (1 + gbar s).
double laplace_inr(double k_factor, double mean_inr, double s);

// i-th derivative of log L(s):
//   delta^(i)(s) = (i-1)! (-gbar)^i / (1+gbar s)^i * (1 + i K / (1+gbar s)).
double delta_term(int i, double k_factor, double mean_inr, double s);

// S_i(s) = sum over interferers of delta^(i) minus C_i, C_1 = 1, C_{i>=2} = 0;
// equals the i-th derivative of log D(s).
double s_aggregate(int i, const InterfererSet& set, double s);

// n-th derivative of D(s) by the partition-sum expansion; n = 0 gives D(s)
// itself. Capped at `max_order` (partition counts grow quickly).
double delta_n(int n, const InterfererSet& set, double s, int max_order = 64);

// mu_k = E[(gamma_I + gamma_J + 1)^k] = (-1)^k D^(k)(0).
double interference_moment(int k, const InterfererSet& set);

// log mu_n for n = 0..n_max, by a same-sign convolution recurrence carried
// entirely in the log domain (usable far past double overflow).
std::vector<double> log_interference_moments(const InterfererSet& set, int n_max);

// Scaled derivative sequence T_n = (-s0)^n D^(n)(s0) / n! >= 0, which sums
// to 1 over all n. Computed by the same-sign recurrence
//   T_{n+1} = 1/(n+1) sum_{k=0}^{n} u_{k+1} T_{n-k},
// extended past `min_terms` until the remaining mass is below 1e-16 or the
// hard cap is reached; `residual` carries whatever mass is left.
struct ScaledDerivativeSeries {
    std::vector<double> t;
    double residual = 0.0;
};
ScaledDerivativeSeries scaled_derivative_series(const InterfererSet& set, double s0,
                                                int min_terms, int hard_cap = 8192);

}  // namespace interference
}  // namespace airis

#endif
