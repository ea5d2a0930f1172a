#pragma once

#include <numbers>
#include <vector>

namespace tvalue {

/// Riemann zeta and depth-one t-values, tabulated once for 2 <= n <= n_max.
class ConstantTable {
 public:
  static constexpr int kDefaultMax = 64;

  explicit ConstantTable(int n_max = kDefaultMax);

  /// Process-wide table with the default range.
  static const ConstantTable& instance();

  int n_max() const noexcept { return n_max_; }

  /// zeta(n) for n >= 2; values beyond n_max are computed on demand.
  double zeta(int n) const;
  /// t(n) = (1 - 2^-n) zeta(n), n >= 2.
  double t(int n) const;

  static constexpr double pi = std::numbers::pi;
  static constexpr double log2 = std::numbers::ln2;
  static constexpr double euler_gamma = 0.5772156649015329;

 private:
  int n_max_;
  std::vector<double> zeta_;
  std::vector<double> t_;
};

/// zeta(n), n >= 2, via the alternating eta series with Cohen-Villegas-Zagier
/// acceleration. Throws Error(domain) for n < 2.
double zeta(int n);

/// t(n) = sum over odd m of m^-n. Throws Error(domain) for n < 2.
double t_value_depth1(int n);

}  // namespace tvalue
