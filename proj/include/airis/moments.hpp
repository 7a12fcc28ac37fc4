#ifndef AIRIS_MOMENTS_HPP
#define AIRIS_MOMENTS_HPP

#include <cstdint>
#include <map>
#include <vector>

// Moment machinery for sums of IID nonnegative RVs via integer-partition
// sums, cascade moments, blockage-truncated direct-link moments, and the
// combined air-to-ground moment.

namespace airis {
namespace moments {

// One partition of k into r positive parts, parts nonincreasing, plus the
// distinct values with multiplicities.
struct PartitionSignature {
    std::vector<int> parts;                        // p_1 >= ... >= p_r
    std::vector<std::pair<int, int>> distinct;     // (value, multiplicity)
    double log_multinomial = 0.0;                  // log( prod 1/p_j! )
    double log_perm_correction = 0.0;              // log( prod 1/nu_i! )
};

// All partitions of k grouped by part count r (index r-1). Cached and safe
// for concurrent readers.
const std::vector<std::vector<PartitionSignature>>& partitions_of(int k);

// Number of compositions of k into r positive parts, from the partition
// table: sum over partitions of r! / prod nu_i!  (equals C(k-1, r-1)).
std::uint64_t composition_count(int k, int r);

// Moments keyed by twice the order, so half-integer orders stay exact.
class MomentTable {
  public:
    void set(double order, double value) { values_[twice(order)] = value; }
    double at(double order) const;
    bool has(double order) const { return values_.count(twice(order)) > 0; }

  private:
    static int twice(double order);
    std::map<int, double> values_;
};

// k-th moment of a sum of `count` IID components whose raw moments of
// order 1..k are in `component_moments` (integer keys):
//   sum_{r=1}^{k} k! count!/(count-r)! sum_{partitions of k into r parts}
//       (prod 1/p_j!) prod_i mu_{p_<i>}^{nu_i} / nu_i!
// Terms with r > count vanish through the falling factorial.
double sum_power_moment(int k, int count, const MomentTable& component_moments);

// k-th moment (k = two_k/2) of the squared coherent cascade sum across
// `count` elements; element_half_moments holds E[Z^i] for i = 1..two_k
// where Z is one element's amplitude product.
double cascade_moment(int two_k, int count, const MomentTable& element_half_moments);

// k-th moment (k any nonnegative multiple of 1/2) of the censored direct
// link scaled by `scale`:
//   (pi1 / (1-beta)) NuttallQ_{2k+1,0}(sqrt(2K), sqrt(2 lambda tau))
//       * (scale / (2 lambda))^k
// At k = 0 this is the censored mass pi1 whenever beta matches the same
// (K, lambda, tau) threshold law.
double truncated_direct_moment(double k, double k_ud, double lambda_ud, double tau,
                               double pi1, double beta, double scale);

// k-th moment of |sqrt(cas) + sqrt(dir)|^2 for independent nonnegative cas
// and dir: sum_{i=0}^{2k} C(2k,i) mu_{k-i/2,cas} m_{i/2} where m_0 = 1
// (the zeroth moment of the censored mixture, counting its atom at zero)
// and m_{i/2} = dir.at(i/2) for i >= 1.
double a2g_combined_moment(int k, const MomentTable& cas, const MomentTable& dir);

}  // namespace moments
}  // namespace airis

#endif
