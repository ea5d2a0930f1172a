#pragma once

#include <vector>

#include "tvalue/estimate.hpp"
#include "tvalue/series.hpp"

namespace tvalue::genfun {

inline constexpr long long kDefaultTerms = 200'000;
inline constexpr int kDefaultDegreeCap = 8;
inline constexpr int kDefaultZLength = 21;

/// Running odd coefficient c_n = a_{2n+1} of the power-series solution
/// Phi0(z) = sum_n c_n z^{2n+1} (or its star analogue).
///
/// The two upper (non-star) or lower (star) hypergeometric parameters enter
/// only through e1 = alpha + beta and e2 = alpha * beta:
///   non-star: e1 = 1 - u/2 + v/2,  e2 = (1 - u + v - uv + w)/4
///   star:     e1 = 3 - u/2 - v/2,  e2 = (9 - 3u - 3v + uv - w)/4
struct RecurrenceState {
  bool star = false;
  int degree_cap = 0;
  TruncatedSeries e1;
  TruncatedSeries e2;
  TruncatedSeries c_current;
  long long n = 0;
};

/// n = 0 with c_0 = 1/(1-u) (non-star) or 1/(1-u-v+uv-w) (star).
RecurrenceState init_state(bool star, int degree_cap);

/// The product (m + alpha - 1)(m + beta - 1) = m^2 + m(e1 - 2) + 1 - e1 + e2.
TruncatedSeries shifted_root_product(const TruncatedSeries& e1, const TruncatedSeries& e2,
                                     double m);

/// c_{n+1} from c_n:
///   non-star: c_m = c_{m-1} (m+alpha-1)(m+beta-1) / ((m + 1/2)(m + (1-u)/2))
///   star:     c_m = c_{m-1} (m - 1/2 - u/2)(m - 1/2) / ((m+alpha*-1)(m+beta*-1))
/// with m = n + 1.
RecurrenceState step(RecurrenceState state);

/// The coefficient ratio a_{2m+1}/a_{2m-1} exactly as obtained from the
/// differential equation before introducing alpha, beta (used as a check of
/// the symmetric-function form).
TruncatedSeries raw_ratio(bool star, int degree_cap, long long m);

/// Phi0(u,v,w;1) with a per-coefficient error bound.
struct SeriesEstimate {
  TruncatedSeries value;
  TruncatedSeries err;
  long long n_terms = 0;
  int extrap_order = 0;
};

/// Sum of c_0..c_{n_terms}, extrapolated coefficientwise with the tail model
/// N^-1 P(log N). By default (`log_degree` < 0) the coefficient of u^a v^b w^c
/// uses deg P = b, which is exact for the leading tail; a nonnegative
/// `log_degree` applies one degree to every coefficient. The fit needs
/// deg P + 3 checkpoints n_terms, n_terms/2, ..., so n_terms must be at least
/// about 2^(deg P + 3); Error(domain) otherwise.
SeriesEstimate phi0_at_one(bool star, int degree_cap = kDefaultDegreeCap,
                           long long n_terms = kDefaultTerms, int log_degree = -1);

/// Coefficient of u^{k-n-s} v^{n-s} w^{s-1}, i.e. G0(k,n,s) or G0*(k,n,s).
/// Error(invalid_index) for an empty cell, Error(out_of_range) past the cap.
Estimate extract_g0(const SeriesEstimate& series, int k, int n, int s);

/// Monomial carrying G0(k,n,s) in the generating function.
Monomial g0_exponent(int k, int n, int s);

/// Phi0(z) truncated at z^{z_len-1}: odd coefficients c_n, even ones zero.
/// Requires z_len odd and >= 3 (Error(domain)).
ZSeries build_z_series(bool star, int degree_cap, int z_len);

/// Left side minus right side of the second-order equation satisfied by Phi0:
///   non-star: z(1-z^2)F'' + [(1-u)(1-z^2) - v z^2] F' + (uv - w) z F - 1
///   star:     z^2(1-z^2)F'' + [(1-u) z (1-z^2) - v z] F' + (uv - w) F - z
/// Orders below length - 2 vanish for the true solution.
ZSeries ode_residual(const ZSeries& f, bool star);

/// Phi = 1 + w Phi0 + v z Phi0' - uv Phi0, the generating function of all
/// index sums G(k,n,s;z), solved from the first equation of the coupled system.
ZSeries recover_phi(const ZSeries& f0, bool star);

/// Second equation of the coupled system with denominators cleared:
///   non-star: (1-z^2) d/dz(Phi - w Phi0) - v z Phi - v (1 - z)
///   star:     z(1-z^2) d/dz(Phi - w Phi0) - v Phi + v (1 - z)
ZSeries coupled_residual(const ZSeries& f0, const ZSeries& phi, bool star);

}  // namespace tvalue::genfun
