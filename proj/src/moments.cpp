#include "airis/moments.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "airis/specfun.hpp"

namespace airis {
namespace moments {

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& stack,
               std::vector<std::vector<PartitionSignature>>& by_r) {
    if (remaining == 0) {
        PartitionSignature sig;
        sig.parts = stack;
        double log_mn = 0.0;
        for (int p : sig.parts) log_mn -= specfun::log_factorial(p);
        sig.log_multinomial = log_mn;
        for (std::size_t i = 0; i < sig.parts.size();) {
            std::size_t j = i;
            while (j < sig.parts.size() && sig.parts[j] == sig.parts[i]) ++j;
            const int mult = static_cast<int>(j - i);
            sig.distinct.emplace_back(sig.parts[i], mult);
            sig.log_perm_correction -= specfun::log_factorial(mult);
            i = j;
        }
        const std::size_t r = sig.parts.size();
        if (by_r.size() < r) by_r.resize(r);
        by_r[r - 1].push_back(std::move(sig));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        enumerate(remaining - p, p, stack, by_r);
        stack.pop_back();
    }
}

std::shared_mutex cache_mutex;
std::map<int, std::vector<std::vector<PartitionSignature>>> cache;

}  // namespace

const std::vector<std::vector<PartitionSignature>>& partitions_of(int k) {
    if (k < 1) throw std::domain_error("partitions_of: k must be >= 1");
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(cache_mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<PartitionSignature>> by_r;
    std::vector<int> stack;
    enumerate(k, k, stack, by_r);
    by_r.resize(k);  // r can run up to k even if some buckets are empty
    return cache.emplace(k, std::move(by_r)).first->second;
}

std::uint64_t composition_count(int k, int r) {
    const auto& table = partitions_of(k);
    if (r < 1 || r > k) return 0;
    double total = 0.0;
    for (const auto& sig : table[r - 1]) {
        double log_orderings = specfun::log_factorial(r);
        for (const auto& [value, mult] : sig.distinct) {
            (void)value;
            log_orderings -= specfun::log_factorial(mult);
        }
        total += std::exp(log_orderings);
    }
    return static_cast<std::uint64_t>(std::llround(total));
}

int MomentTable::twice(double order) {
    const double t = 2.0 * order;
    const int ti = static_cast<int>(std::lround(t));
    if (std::abs(t - ti) > 1e-9) {
        throw std::domain_error("MomentTable: order must be a multiple of 1/2");
    }
    return ti;
}

double MomentTable::at(double order) const {
    const auto it = values_.find(twice(order));
    if (it == values_.end()) {
        throw std::out_of_range("MomentTable: missing order " + std::to_string(order));
    }
    return it->second;
}

double sum_power_moment(int k, int count, const MomentTable& component_moments) {
    if (k < 1) throw std::domain_error("sum_power_moment: k must be >= 1");
    if (count < 1) throw std::domain_error("sum_power_moment: count must be >= 1");
    for (int i = 1; i <= k; ++i) {
        if (!component_moments.has(static_cast<double>(i))) {
            throw std::out_of_range("sum_power_moment: component moment of order " +
                                    std::to_string(i) + " missing");
        }
    }
    const auto& table = partitions_of(k);
    const double log_kfac = specfun::log_factorial(k);
    double total = 0.0;
    double log_falling = 0.0;  // log count!/(count-r)!
    for (int r = 1; r <= std::min(k, count); ++r) {
        log_falling += std::log(static_cast<double>(count - r + 1));
        double inner = 0.0;
        for (const auto& sig : table[r - 1]) {
            double log_term = sig.log_multinomial + sig.log_perm_correction;
            double mom = 1.0;
            for (const auto& [value, mult] : sig.distinct) {
                mom *= std::pow(component_moments.at(static_cast<double>(value)), mult);
            }
            inner += std::exp(log_term) * mom;
        }
        total += std::exp(log_kfac + log_falling) * inner;
    }
    return total;
}

double cascade_moment(int two_k, int count, const MomentTable& element_half_moments) {
    if (two_k < 1) throw std::domain_error("cascade_moment: 2k must be >= 1");
    // E[(sum_n Z_n)^{2k}]: the element table is keyed by the integer order
    // of E[Z^i], which is the i/2-order pair of channel power moments.
    return sum_power_moment(two_k, count, element_half_moments);
}

double truncated_direct_moment(double k, double k_ud, double lambda_ud, double tau,
                               double pi1, double beta, double scale) {
    if (k < 0.0) throw std::domain_error("truncated_direct_moment: k must be >= 0");
    const int two_k = static_cast<int>(std::lround(2.0 * k));
    if (std::abs(2.0 * k - two_k) > 1e-9) {
        throw std::domain_error("truncated_direct_moment: k must be a multiple of 1/2");
    }
    if (tau < 0.0) throw std::domain_error("truncated_direct_moment: tau must be >= 0");
    if (beta >= 1.0 - 1e-15) {
        // Fully blocked limit: only the censored mass survives at k = 0.
        return (two_k == 0) ? pi1 : 0.0;
    }
    const double a = std::sqrt(2.0 * k_ud);
    const double b = std::sqrt(2.0 * lambda_ud * tau);
    const double q = specfun::nuttall_q(two_k + 1, 0, a, b);
    return pi1 / (1.0 - beta) * q *
           std::pow(scale / (2.0 * lambda_ud), static_cast<double>(k));
}

double a2g_combined_moment(int k, const MomentTable& cas, const MomentTable& dir) {
    if (k < 0) throw std::domain_error("a2g_combined_moment: k must be >= 0");
    if (k == 0) return 1.0;
    double total = 0.0;
    for (int i = 0; i <= 2 * k; ++i) {
        const double log_c = specfun::log_factorial(2 * k) - specfun::log_factorial(i) -
                             specfun::log_factorial(2 * k - i);
        const double m_cas = cas.at(k - i / 2.0);
        const double m_dir = (i == 0) ? 1.0 : dir.at(i / 2.0);
        total += std::exp(log_c) * m_cas * m_dir;
    }
    return total;
}

}  // namespace moments
}  // namespace airis
