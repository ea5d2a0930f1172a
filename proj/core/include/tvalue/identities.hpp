#pragma once

#include <optional>

#include "tvalue/genfun.hpp"
#include "tvalue/oracle.hpp"
#include "tvalue/report.hpp"

namespace tvalue::identities {

/// Acceptance thresholds. `base` is the default 1e-6 tolerance; `high_weight`
/// applies to weights 7-8 of the main theorems and 6-8 of the weighted sum.
struct Tolerances {
  double base = 1e-6;
  double high_weight = 1e-4;
  double max_height = 1e-5;
  double product = 1e-5;
  double closed_form = 1e-8;
  double height_one_fd = 1e-5;
  double ode = 1e-12;
};

struct Config {
  long long cutoff = oracle::kDefaultCutoff;
  long long n_terms = genfun::kDefaultTerms;
  int degree_cap = genfun::kDefaultDegreeCap;
  int z_len = genfun::kDefaultZLength;
  unsigned threads = 0;
  Tolerances tol;
};

/// Caches the expensive ingredients (oracle tables, z = 1 generating
/// functions) so several suites can share them. Not safe for concurrent use.
class Workbench {
 public:
  explicit Workbench(Config config = {}) : config_(config) {}

  const Config& config() const noexcept { return config_; }

  /// Oracle table covering at least weight k_max.
  const SumTable& oracle_table(bool star, int k_max);
  const genfun::SeriesEstimate& phi0(bool star);

 private:
  Config config_;
  std::optional<SumTable> tables_[2];
  std::optional<genfun::SeriesEstimate> phi0_[2];
};

/// Oracle G0(k,n,s) against the generating-function coefficient, all
/// nonempty cells with k <= k_max. Requires k_max <= degree_cap + 2.
VerificationReport verify_theorem_main(Workbench& wb, bool star, int k_max = 8);

/// Height one: (i) the w^0 part of the generating function against the
/// oracle t(k-n+1, {1}^{n-1}) for k <= k_max; (ii) the oracle
/// t(m, {1}^{n-1}) (m <= m_max, n <= n_max) against v-derivatives of the
/// (m+1)F(m) generating function taken by Richardson-extrapolated central
/// differences.
VerificationReport verify_height_one(Workbench& wb, bool star, int k_max = 8, int n_max = 4,
                                     int m_max = 4);

/// v-coefficient extraction used by verify_height_one (ii): the coefficient of
/// v^{n-1} of sum_n t(m,{1}^{n-1}) v^{n-1} (or the star analogue) taken from
/// the (m+1)F(m) closed form. Returns the value with a difference-table error.
Estimate height_one_pfq_coefficient(bool star, int m, int n);

/// Exponential formulas for the maximal-height sums, k <= k_max.
VerificationReport verify_max_height(Workbench& wb, bool star, int k_max = 10);

/// Right side of the maximal-height formula as a (u,w) series (v slot unused)
/// truncated at `degree_cap`.
TruncatedSeries max_height_rhs(bool star, int degree_cap);

/// The product of the two maximal-height generating functions is 1.
VerificationReport verify_product_identity(Workbench& wb, int k_max = 10);

/// t({2}^n) and t*({2}^n) against exponentials of depth-one values, n <= n_max.
VerificationReport verify_u0_specialization(Workbench& wb, bool star, int n_max = 4);

/// Coefficient of w^n in exp(sum_j (+-1)^{j-1} t(2j) w^j / j).
double u0_rhs_coefficient(bool star, int n);

/// Weighted sums over depth, both sides against 2^{2u} t(2) exp(...), and the
/// multinomial expansion as a second route for k <= 6.
VerificationReport verify_weighted_sum(Workbench& wb, int k_max = 8);

/// Coefficient of u^{k-2} in 2^{2u} t(2) exp(sum_{n>=2} 4(2^{n-1}-1) t(n) u^n / (n(2^n-1))).
double weighted_sum_series_coefficient(int k);

/// The same coefficient by enumerating the multinomial expansion.
double weighted_sum_multinomial_coefficient(int k);

/// ODE residuals (both variants) and the coupled-system residual, per z-order.
VerificationReport verify_ode(const Config& config);

}  // namespace tvalue::identities
