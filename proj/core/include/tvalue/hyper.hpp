#pragma once

#include <vector>

#include "tvalue/estimate.hpp"

namespace tvalue::hyper {

inline constexpr long long kDefaultTerms = 1 << 17;

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
double pochhammer(double a, int n);

/// Parameters of pFq(upper; lower; z) with p = upper.size(), q = lower.size().
struct PFQParams {
  std::vector<double> upper;
  std::vector<double> lower;
  double z = 0.0;

  /// sum(lower) - sum(upper); the series converges at |z| = 1 when positive.
  double excess() const noexcept;
};

/// Sum of prod (a_i)_n / (n! prod (b_j)_n) z^n.
///
/// Errors: Error(pole) if a lower parameter is a nonpositive integer;
/// Error(divergent) if |z| > 1, or |z| = 1 with excess() <= 0, or p > q + 1
/// with z != 0. At z = 1 the partial sums are extrapolated with the tail
/// model N^-excess (d0 + d1/N + d2/N^2). z = -1 is rejected with Error(domain).
Estimate eval_pfq(const PFQParams& p, long long n_terms = kDefaultTerms);

/// Closed form of 3F2(a, b, 1; c, 2+a+b-c; 1). Where 1+a-c or 1+b-c vanishes
/// the formula is 0/0 and its limit is returned instead.
double sum_3f2_unit(double a, double b, double c);

/// Dixon's theorem: 3F2(a, b, c; 1+a-b, 1+a-c; 1). Requires a - 2b - 2c > -2.
double dixon_3f2(double a, double b, double c);

/// Gamma(1 - z) = exp(gamma z + sum_{n>=2} zeta(n) z^n / n), |z| < 1.
Estimate gamma_one_minus(double z);

/// Gamma((1 - z)/2) = sqrt(pi) 2^z exp(gamma z/2 + sum_{n>=2} t(n) z^n / n), |z| < 1.
Estimate gamma_half_minus_half(double z);

/// Gamma(x) for real x off the poles: shifts x into [1/2, 3/2) with the
/// functional equation and evaluates gamma_one_minus there.
double gamma(double x);

/// psi(x) and psi'(x) from the derivatives of the same expansion,
/// psi(1 - z) = -gamma - sum zeta(n) z^{n-1}.
double digamma(double x);
double trigamma(double x);

}  // namespace tvalue::hyper
