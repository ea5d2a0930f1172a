#include "tvalue/hyper.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tvalue/constants.hpp"
#include "tvalue/error.hpp"
#include "tvalue/extrapolation.hpp"
#include "tvalue/summation.hpp"

namespace tvalue::hyper {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSeriesTerms = 100'000;

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Nonnegative n with (a)_n = 0 for n > order when a is a nonpositive integer.
long long terminating_order(const std::vector<double>& upper) {
  long long order = -1;
  for (double a : upper) {
    if (nonpositive_integer(a)) {
      const auto o = static_cast<long long>(-a);
      order = order < 0 ? o : std::min(order, o);
    }
  }
  return order;
}

double term_ratio(const PFQParams& p, long long n) {
  const double nn = static_cast<double>(n);
  double r = p.z / (nn + 1.0);
  for (double a : p.upper) r *= a + nn;
  for (double b : p.lower) r /= b + nn;
  return r;
}

// Shifts x into [1/2, 3/2), reporting each step of the functional equation
// to `shift`; returns the shifted argument.
double reduce_argument(double x, auto&& shift) {
  while (x >= 1.5) {
    x -= 1.0;
    shift(x, +1);  // Gamma(x+1) = x Gamma(x)
  }
  while (x < 0.5) {
    shift(x, -1);  // Gamma(x) = Gamma(x+1)/x
    x += 1.0;
  }
  return x;
}

// 1/Gamma(x), zero at the poles.
double rgamma(double x) { return nonpositive_integer(x) ? 0.0 : 1.0 / gamma(x); }

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw Error(ErrorKind::domain, "pochhammer needs n >= 0");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

double PFQParams::excess() const noexcept {
  return std::accumulate(lower.begin(), lower.end(), 0.0) -
         std::accumulate(upper.begin(), upper.end(), 0.0);
}

Estimate eval_pfq(const PFQParams& p, long long n_terms) {
  for (double b : p.lower) {
    if (nonpositive_integer(b)) {
      throw Error(ErrorKind::pole, "lower parameter " + std::to_string(b) + " is a pole");
    }
  }
  if (n_terms < 1) throw Error(ErrorKind::domain, "eval_pfq needs n_terms >= 1");

  const long long order = terminating_order(p.upper);
  if (order >= 0 || p.z == 0.0) {
    // Polynomial (or trivially 1): exact finite sum.
    CompensatedSum s(1.0);
    double t = 1.0;
    for (long long n = 0; n < order; ++n) {
      t *= term_ratio(p, n);
      s.add(t);
    }
    return {s.value(), 8.0 * kEps * std::abs(s.value()), order < 0 ? 0 : order, 0};
  }

  const double az = std::abs(p.z);
  if (p.upper.size() > p.lower.size() + 1) {
    throw Error(ErrorKind::divergent, "pFq with p > q+1 diverges for z != 0");
  }
  if (az > 1.0) throw Error(ErrorKind::divergent, "pFq diverges for |z| > 1");
  const bool unit = az == 1.0 && p.upper.size() == p.lower.size() + 1;
  if (unit && p.excess() <= 0.0) {
    throw Error(ErrorKind::divergent, "pFq at |z| = 1 needs sum(b) - sum(a) > 0, got " +
                                          std::to_string(p.excess()));
  }
  if (unit && p.z < 0.0) {
    throw Error(ErrorKind::domain, "pFq at z = -1 is not supported");
  }

  if (!unit) {
    CompensatedSum s(1.0);
    double t = 1.0;
    double abs_sum = 1.0;
    long long n = 0;
    for (; n < n_terms; ++n) {
      const double r = term_ratio(p, n);
      t *= r;
      s.add(t);
      abs_sum += std::abs(t);
      const double next_r = std::abs(term_ratio(p, n + 1));
      if (std::abs(t) <= kEps * 1e-2 * std::abs(s.value()) && next_r < 1.0) {
        ++n;
        break;
      }
    }
    const double r = std::abs(term_ratio(p, n));
    const double tail = r < 1.0 ? std::abs(t) * r / (1.0 - r) : std::numeric_limits<double>::infinity();
    return {s.value(), tail + 8.0 * kEps * abs_sum, n, 0};
  }

  // z = 1: terms ~ n^{-1-excess}, so S(N) = S_inf - N^{-excess} (d0 + d1/N + d2/N^2 + ...).
  const TailModel model{p.excess(), 0, 2};
  const auto points = geometric_checkpoints(n_terms, model.unknowns() + 1, false);
  std::vector<double> partial(points.size());
  CompensatedSum s(1.0);
  double t = 1.0;
  std::size_t next = points.size();
  // After iteration n, s holds the sum of terms 0..n, i.e. S(n+1).
  for (long long n = 0; n + 1 < n_terms; ++n) {
    while (next > 0 && points[next - 1] == n + 1) partial[--next] = s.value();
    t *= term_ratio(p, n);
    s.add(t);
  }
  while (next > 0) partial[--next] = s.value();
  const std::vector<double> ns(points.begin(), points.end());
  const Extrapolated e = TailFit(ns, model).apply(partial);
  return {e.value, e.err_bound, n_terms, model.inverse_powers};
}

Estimate gamma_one_minus(double z) {
  if (!(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::domain, "gamma_one_minus needs |z| < 1, got " + std::to_string(z));
  }
  const auto& k = ConstantTable::instance();
  CompensatedSum log_gamma(ConstantTable::euler_gamma * z);
  double zn = z;
  int n = 2;
  for (; n < kMaxSeriesTerms; ++n) {
    zn *= z;
    const double term = k.zeta(n) * zn / n;
    log_gamma.add(term);
    if (std::abs(term) < 1e-3 * kEps * (1.0 + std::abs(log_gamma.value()))) break;
  }
  const double az = std::abs(z);
  // zeta(m) <= zeta(n+1) for the neglected m > n.
  const double tail = k.zeta(n + 1) * std::pow(az, n + 1) / ((n + 1) * (1.0 - az));
  const double value = std::exp(log_gamma.value());
  return {value, value * (std::expm1(tail) + 8.0 * kEps * (1.0 + std::abs(log_gamma.value()))), n, 0};
}

Estimate gamma_half_minus_half(double z) {
  if (!(std::abs(z) < 1.0)) {
    throw Error(ErrorKind::domain, "gamma_half_minus_half needs |z| < 1, got " + std::to_string(z));
  }
  const auto& k = ConstantTable::instance();
  CompensatedSum exponent(0.5 * ConstantTable::euler_gamma * z);
  double zn = z;
  int n = 2;
  for (; n < kMaxSeriesTerms; ++n) {
    zn *= z;
    const double term = k.t(n) * zn / n;
    exponent.add(term);
    if (std::abs(term) < 1e-3 * kEps * (1.0 + std::abs(exponent.value()))) break;
  }
  const double az = std::abs(z);
  const double tail = k.t(n + 1) * std::pow(az, n + 1) / ((n + 1) * (1.0 - az));
  const double value = std::sqrt(ConstantTable::pi) * std::exp2(z) * std::exp(exponent.value());
  return {value, value * (std::expm1(tail) + 8.0 * kEps * (1.0 + std::abs(exponent.value()))), n, 0};
}

double gamma(double x) {
  if (nonpositive_integer(x)) throw Error(ErrorKind::pole, "Gamma has a pole at " + std::to_string(x));
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, "Gamma of a non-finite argument");
  double factor = 1.0;
  const double y = reduce_argument(x, [&](double arg, int dir) {
    if (dir > 0) factor *= arg;
    else factor /= arg;
  });
  return factor * gamma_one_minus(1.0 - y).value;
}

double digamma(double x) {
  if (nonpositive_integer(x)) throw Error(ErrorKind::pole, "digamma has a pole at " + std::to_string(x));
  double shift = 0.0;
  const double y = reduce_argument(x, [&](double arg, int dir) {
    // psi(x+1) = psi(x) + 1/x
    shift += dir > 0 ? 1.0 / arg : -1.0 / arg;
  });
  // psi(1 - z) = -gamma - sum_{n>=2} zeta(n) z^{n-1}
  const double z = 1.0 - y;
  const auto& k = ConstantTable::instance();
  CompensatedSum s(-ConstantTable::euler_gamma);
  double zn = 1.0;
  for (int n = 2; n < kMaxSeriesTerms; ++n) {
    zn *= z;
    const double term = k.zeta(n) * zn;
    s.add(-term);
    if (std::abs(term) < 1e-3 * kEps) break;
  }
  return s.value() + shift;
}

double trigamma(double x) {
  if (nonpositive_integer(x)) throw Error(ErrorKind::pole, "trigamma has a pole at " + std::to_string(x));
  double shift = 0.0;
  const double y = reduce_argument(x, [&](double arg, int dir) {
    // psi'(x+1) = psi'(x) - 1/x^2
    shift += dir > 0 ? -1.0 / (arg * arg) : 1.0 / (arg * arg);
  });
  // psi'(1 - z) = sum_{n>=2} (n-1) zeta(n) z^{n-2}
  const double z = 1.0 - y;
  const auto& k = ConstantTable::instance();
  CompensatedSum s;
  double zn = 1.0;
  for (int n = 2; n < kMaxSeriesTerms; ++n) {
    const double term = (n - 1) * k.zeta(n) * zn;
    s.add(term);
    if (std::abs(term) < 1e-3 * kEps) break;
    zn *= z;
  }
  return s.value() + shift;
}

double sum_3f2_unit(double a, double b, double c) {
  const double lower2 = 2.0 + a + b - c;
  if (nonpositive_integer(c) || nonpositive_integer(lower2)) {
    throw Error(ErrorKind::pole, "3F2(a,b,1;c,2+a+b-c;1) has a lower parameter at a pole");
  }
  if (nonpositive_integer(a) || nonpositive_integer(b)) {
    return eval_pfq({{a, b, 1.0}, {c, lower2}, 1.0}).value;
  }
  if (nonpositive_integer(1.0 + a + b - c)) {
    throw Error(ErrorKind::pole, "Gamma(1+a+b-c) at a pole");
  }
  const double da = 1.0 + a - c;
  const double db = 1.0 + b - c;
  constexpr double kDegenerate = 1e-13;
  const bool a_degenerate = std::abs(da) <= kDegenerate * (1.0 + std::abs(c));
  const bool b_degenerate = std::abs(db) <= kDegenerate * (1.0 + std::abs(c));
  if (a_degenerate && b_degenerate) {
    // a = b = c - 1: the sum is a^2 sum_n 1/(a+n)^2.
    return a * a * trigamma(a);
  }
  if (a_degenerate || b_degenerate) {
    // 0/0 in the closed form; l'Hopital in the vanishing factor.
    const double other = a_degenerate ? b : a;
    const double d_other = a_degenerate ? db : da;
    return other / d_other * (c - 1.0) * (digamma(other) - digamma(c - 1.0));
  }
  const double prefactor = (1.0 + a + b - c) / (da * db);
  return prefactor * (1.0 - c + gamma(c) * gamma(1.0 + a + b - c) * rgamma(a) * rgamma(b));
}

double dixon_3f2(double a, double b, double c) {
  if (!(a - 2.0 * b - 2.0 * c > -2.0)) {
    throw Error(ErrorKind::divergent, "Dixon's sum needs a - 2b - 2c > -2");
  }
  const double l1 = 1.0 + a - b;
  const double l2 = 1.0 + a - c;
  if (nonpositive_integer(l1) || nonpositive_integer(l2)) {
    throw Error(ErrorKind::pole, "Dixon's sum has a lower parameter at a pole");
  }
  const double half = 1.0 + 0.5 * a;
  return std::sqrt(ConstantTable::pi) * std::exp2(-a) * gamma(l1) * gamma(l2) * gamma(half - b - c) *
         rgamma(0.5 * (1.0 + a)) * rgamma(half - b) * rgamma(half - c) * rgamma(1.0 + a - b - c);
}

}  // namespace tvalue::hyper
