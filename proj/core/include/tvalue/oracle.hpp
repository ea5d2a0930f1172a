#pragma once

#include <compare>
#include <map>
#include <vector>

#include "tvalue/estimate.hpp"
#include "tvalue/indices.hpp"

namespace tvalue {

/// Brute-force evaluation of multiple t-values by nested summation over odd
/// integers, followed by a log-polynomial tail fit.
namespace oracle {

inline constexpr long long kDefaultCutoff = 1'000'000;

/// Partial sums recorded during one sweep at the requested odd cutoffs.
struct Sweep {
  std::vector<long long> cutoffs;   // ascending
  std::vector<double> partial_sums;
};

/// Raw nested partial sums sum_{M >= m1 > ... > mn > 0, odd} prod m_i^-k_i
/// (weak inequalities when `star`) at each odd cutoff M in `cutoffs`.
Sweep partial_sums(const Index& ix, std::vector<long long> cutoffs, bool star);

/// t(ix). Requires ix admissible (Error(divergent) otherwise) and
/// cutoff >= 2 * depth; the last odd integer summed is <= cutoff.
Estimate eval_t(const Index& ix, long long cutoff = kDefaultCutoff);

/// t*(ix), the weak-inequality analogue of eval_t.
Estimate eval_t_star(const Index& ix, long long cutoff = kDefaultCutoff);

inline Estimate eval(const Index& ix, bool star, long long cutoff = kDefaultCutoff) {
  return star ? eval_t_star(ix, cutoff) : eval_t(ix, cutoff);
}

}  // namespace oracle

/// Key (k,n,s) of a sum over I0(k,n,s).
struct WeightDepthHeight {
  int k = 0;
  int n = 0;
  int s = 0;

  friend auto operator<=>(const WeightDepthHeight&, const WeightDepthHeight&) = default;
};

/// G0(k,n,s) (or G0*(k,n,s)) for every nonempty cell up to a weight bound.
class SumTable {
 public:
  explicit SumTable(bool star) : star_(star) {}

  bool star() const noexcept { return star_; }

  /// Throws Error(invalid_index) if the cell is empty, Error(out_of_range)
  /// if it was never tabulated.
  const Estimate& at(int k, int n, int s) const;
  bool contains(int k, int n, int s) const;

  /// G0(k,n) = sum over heights of G0(k,n,s).
  Estimate weight_depth(int k, int n) const;

  void insert(WeightDepthHeight key, Estimate e);

  const std::map<WeightDepthHeight, Estimate>& entries() const noexcept { return entries_; }
  int k_max() const noexcept;

 private:
  bool star_;
  std::map<WeightDepthHeight, Estimate> entries_;
};

namespace oracle {

/// Tabulates every nonempty (k,n,s) with 2 <= k <= k_max; each cell is the sum
/// of eval over enumerate_admissible, errors added. `threads` = 0 picks the
/// hardware concurrency.
SumTable sum_table(int k_max, bool star, long long cutoff = kDefaultCutoff,
                   unsigned threads = 0);

}  // namespace oracle

}  // namespace tvalue
