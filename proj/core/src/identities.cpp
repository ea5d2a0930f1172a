#include "tvalue/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tvalue/constants.hpp"
#include "tvalue/error.hpp"
#include "tvalue/hyper.hpp"
#include "tvalue/indices.hpp"

namespace tvalue::identities {

namespace {

using S = TruncatedSeries;

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Two exact-arithmetic routes to the same expansion coefficient.
constexpr double kExpansionTol = 1e-12;

std::string cell_label(const char* name, int k, int n, int s) {
  return std::string(name) + "(" + std::to_string(k) + "," + std::to_string(n) + "," +
         std::to_string(s) + ")";
}

std::string monomial_label(int a, int c) {
  return "u^" + std::to_string(a) + " w^" + std::to_string(c);
}

// Estimate for a coefficient computed by exact series algebra from rounded
// constants: a few ulps relative.
Estimate algebraic(double x) { return {x, 64.0 * kEps * std::abs(x), 0, 0}; }

S abs_coeffs(const S& f) {
  S g = f;
  for (double& c : g.data()) c = std::abs(c);
  return g;
}

// The maximal-height series 1 + sign^c w phi0(u,0,w), carried to cap D+1.
void max_height_lhs(const genfun::SeriesEstimate& phi, bool alternate, S& value, S& err) {
  const int cap = phi.value.degree_cap() + 1;
  value = S::constant(cap, 1.0);
  err = S(cap);
  for (int c = 1; c <= cap; ++c) {
    for (int a = 0; a + c <= cap; ++a) {
      const double sign = alternate && (c % 2) ? -1.0 : 1.0;
      value.set({a, 0, c}, sign * phi.value.coeff(a, 0, c - 1));
      err.set({a, 0, c}, phi.err.coeff(a, 0, c - 1));
    }
  }
}

// j-th central difference of f at 0 with step h, divided by h^j.
template <typename F>
double central_difference(F&& f, int j, double h) {
  double sum = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= j; ++i) {
    const double x = (0.5 * j - i) * h;
    sum += (i % 2 ? -1.0 : 1.0) * binom * f(x);
    binom = binom * (j - i) / (i + 1);
  }
  return sum / std::pow(h, j);
}

}  // namespace

const SumTable& Workbench::oracle_table(bool star, int k_max) {
  auto& slot = tables_[star ? 1 : 0];
  if (!slot || slot->k_max() < k_max) {
    slot = oracle::sum_table(k_max, star, config_.cutoff, config_.threads);
  }
  return *slot;
}

const genfun::SeriesEstimate& Workbench::phi0(bool star) {
  auto& slot = phi0_[star ? 1 : 0];
  if (!slot) slot = genfun::phi0_at_one(star, config_.degree_cap, config_.n_terms);
  return *slot;
}

VerificationReport verify_theorem_main(Workbench& wb, bool star, int k_max) {
  const auto& cfg = wb.config();
  if (k_max > cfg.degree_cap + 2) {
    throw Error(ErrorKind::domain, "k_max " + std::to_string(k_max) + " exceeds degree cap + 2");
  }
  const SumTable& table = wb.oracle_table(star, k_max);
  const auto& phi = wb.phi0(star);
  VerificationReport rep;
  rep.suite = star ? "theorem2" : "theorem1";
  rep.identity = star ? "oracle G0*(k,n,s) = coefficient of star 3F2 generating function"
                      : "oracle G0(k,n,s) = coefficient of 3F2 generating function";
  for (int k = 2; k <= k_max; ++k)
    for (int n = 1; n < k; ++n)
      for (int s = 1; s <= n; ++s) {
        if (!admissible_set_nonempty(k, n, s)) continue;
        const double tol = k <= 6 ? cfg.tol.base : cfg.tol.high_weight;
        rep.add(cell_label(star ? "G0*" : "G0", k, n, s), table.at(k, n, s),
                genfun::extract_g0(phi, k, n, s), tol);
      }
  return rep;
}

Estimate height_one_pfq_coefficient(bool star, int m, int n) {
  if (m < 2 || n < 1) throw Error(ErrorKind::domain, "height-one route needs m >= 2, n >= 1");
  const auto f = [star, m](double v) {
    hyper::PFQParams p;
    p.z = 1.0;
    if (!star) {
      p.upper = {0.5 * (1.0 + v), 1.0};
      p.upper.insert(p.upper.end(), static_cast<std::size_t>(m - 1), 0.5);
      p.lower.assign(static_cast<std::size_t>(m), 1.5);
      return hyper::eval_pfq(p).value;
    }
    p.upper = {1.0};
    p.upper.insert(p.upper.end(), static_cast<std::size_t>(m), 0.5);
    p.lower = {0.5 * (3.0 - v)};
    p.lower.insert(p.lower.end(), static_cast<std::size_t>(m - 1), 1.5);
    return hyper::eval_pfq(p).value / (1.0 - v);
  };
  const int j = n - 1;
  double factorial = 1.0;
  for (int i = 2; i <= j; ++i) factorial *= i;
  if (j == 0) return {f(0.0), 0.0, hyper::kDefaultTerms, 0};

  // Ridders' extrapolation: shrink h geometrically, eliminate even powers of
  // h, and stop once the tableau error starts growing (evaluation noise
  // dominates beyond that point).
  constexpr int kTab = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  double a[kTab][kTab] = {};
  double h = 0.5;
  a[0][0] = central_difference(f, j, h);
  double best = a[0][0];
  double err = std::numeric_limits<double>::infinity();
  int order = 0;
  for (int i = 1; i < kTab; ++i) {
    h /= kShrink;
    a[0][i] = central_difference(f, j, h);
    double fac = kShrink2;
    for (int l = 1; l <= i; ++l) {
      a[l][i] = (a[l - 1][i] * fac - a[l - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double e = std::max(std::abs(a[l][i] - a[l - 1][i]), std::abs(a[l][i] - a[l - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = a[l][i];
        order = l;
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
  }
  return {best / factorial, err / factorial, hyper::kDefaultTerms, order};
}

VerificationReport verify_height_one(Workbench& wb, bool star, int k_max, int n_max, int m_max) {
  const auto& cfg = wb.config();
  const SumTable& table = wb.oracle_table(star, k_max);
  const auto& phi = wb.phi0(star);
  VerificationReport rep;
  rep.suite = "height-one";
  rep.identity = star ? "height-one t* sums: w^0 slice and (m+1)F(m) route"
                      : "height-one t sums: w^0 slice and (m+1)F(m) route";
  const char* name = star ? "t*" : "t";
  for (int k = 2; k <= k_max; ++k)
    for (int n = 1; n < k; ++n) {
      Index ix([&] {
        std::vector<int> parts{k - n + 1};
        parts.resize(static_cast<std::size_t>(n), 1);
        return parts;
      }());
      const double tol = k <= 6 ? cfg.tol.base : cfg.tol.high_weight;
      rep.add(std::string("slice ") + name + ix.to_string(), table.at(k, n, 1),
              genfun::extract_g0(phi, k, n, 1), tol);
    }
  for (int m = 2; m <= m_max; ++m)
    for (int n = 1; n <= n_max; ++n) {
      std::vector<int> parts{m};
      parts.resize(static_cast<std::size_t>(n), 1);
      const Index ix(parts);
      rep.add(std::string("pFq ") + name + ix.to_string(), oracle::eval(ix, star, cfg.cutoff),
              height_one_pfq_coefficient(star, m, n), cfg.tol.height_one_fd);
    }
  return rep;
}

TruncatedSeries max_height_rhs(bool star, int degree_cap) {
  const S u = S::u(degree_cap);
  const S w = S::w(degree_cap);
  const auto& k = ConstantTable::instance();
  // p_n has total degree >= n/2, so n <= 2 * cap covers the truncation.
  const int n_max = 2 * degree_cap;
  const auto p = power_sums(u, star ? -w : w, n_max);
  S exponent(degree_cap);
  S un = u;
  for (int n = 2; n <= n_max; ++n) {
    un = un * u;
    const S diff = star ? p[static_cast<std::size_t>(n)] - un : un - p[static_cast<std::size_t>(n)];
    exponent += (k.t(n) / n) * diff;
  }
  return exp(exponent);
}

VerificationReport verify_max_height(Workbench& wb, bool star, int k_max) {
  const auto& cfg = wb.config();
  const auto& phi = wb.phi0(star);
  const int cap = cfg.degree_cap + 1;
  if (k_max > cfg.degree_cap + 2) {
    // Cell (k,1,1) carries u^{k-2}.
    throw Error(ErrorKind::domain, "k_max exceeds degree cap + 2");
  }
  const S rhs = max_height_rhs(star, cap);
  VerificationReport rep;
  rep.suite = "max-height";
  rep.identity = star ? "1 + sum G0*(k,n,n) u^{k-2n} w^n = exp(sum t(n)/n (x*^n + y*^n - u^n))"
                      : "1 + sum G0(k,n,n) u^{k-2n} w^n = exp(sum t(n)/n (u^n - x^n - y^n))";
  rep.add("constant term", Estimate::exact(1.0), algebraic(rhs.constant_term()), cfg.tol.max_height);
  for (int k = 2; k <= k_max; ++k)
    for (int n = 1; 2 * n <= k; ++n) {
      rep.add(cell_label(star ? "G0*" : "G0", k, n, n), genfun::extract_g0(phi, k, n, n),
              algebraic(rhs.coeff(k - 2 * n, 0, n)), cfg.tol.max_height);
    }
  return rep;
}

VerificationReport verify_product_identity(Workbench& wb, int k_max) {
  const auto& cfg = wb.config();
  if (k_max > cfg.degree_cap + 2) throw Error(ErrorKind::domain, "k_max exceeds degree cap + 2");
  S a_val(0), a_err(0), b_val(0), b_err(0);
  max_height_lhs(wb.phi0(false), false, a_val, a_err);
  max_height_lhs(wb.phi0(true), true, b_val, b_err);
  const S product = a_val * b_val;
  const S product_err = abs_coeffs(a_val) * b_err + a_err * abs_coeffs(b_val) + a_err * b_err;
  VerificationReport rep;
  rep.suite = "product";
  rep.identity = "(1 + sum G0(k,n,n) u^{k-2n} w^n)(1 + sum (-1)^n G0*(k,n,n) u^{k-2n} w^n) = 1";
  rep.add("constant term", Estimate{product.constant_term(), product_err.constant_term(), 0, 0},
          Estimate::exact(1.0), cfg.tol.product);
  for (int k = 2; k <= k_max; ++k)
    for (int c = 1; 2 * c <= k; ++c) {
      const int a = k - 2 * c;
      rep.add(monomial_label(a, c),
              Estimate{product.coeff(a, 0, c), product_err.coeff(a, 0, c), cfg.n_terms, 0},
              Estimate::exact(0.0), cfg.tol.product);
    }
  return rep;
}

double u0_rhs_coefficient(bool star, int n) {
  if (n < 0) throw Error(ErrorKind::domain, "u0 coefficient needs n >= 0");
  if (n == 0) return 1.0;
  const auto& k = ConstantTable::instance();
  S f(n);
  for (int j = 1; j <= n; ++j) {
    const double sign = star || j % 2 ? 1.0 : -1.0;
    f.set({0, 0, j}, sign * k.t(2 * j) / j);
  }
  return exp(f).coeff(0, 0, n);
}

VerificationReport verify_u0_specialization(Workbench& wb, bool star, int n_max) {
  const auto& cfg = wb.config();
  VerificationReport rep;
  rep.suite = "u0";
  rep.identity = star ? "1 + sum t*({2}^n) w^n = exp(sum t(2n) w^n / n)"
                      : "1 + sum t({2}^n) w^n = exp(sum (-1)^{n-1} t(2n) w^n / n)";
  for (int n = 1; n <= n_max; ++n) {
    const Index ix(repeated(2, n));
    rep.add(std::string(star ? "t*" : "t") + ix.to_string(), oracle::eval(ix, star, cfg.cutoff),
            algebraic(u0_rhs_coefficient(star, n)), cfg.tol.base);
  }
  return rep;
}

double weighted_sum_series_coefficient(int k) {
  if (k < 2) throw Error(ErrorKind::domain, "weighted sum needs k >= 2");
  const int cap = k - 2;
  const auto& c = ConstantTable::instance();
  S f(cap);
  if (cap >= 1) f.set({1, 0, 0}, 2.0 * ConstantTable::log2);  // 2^{2u} = exp(2u log 2)
  for (int n = 2; n <= cap; ++n) {
    const double two_n = std::exp2(n);
    const double coeff = 4.0 * (0.5 * two_n - 1.0) / (n * (two_n - 1.0)) * c.t(n);
    f.set({n, 0, 0}, f.coeff(n, 0, 0) + coeff);
  }
  return c.t(2) * exp(f).coeff(cap, 0, 0);
}

namespace {

// Sums over ordered tuples (n_1..n_m), n_i >= 2, summing to `rest`, of
// prod (2^{n_i-1}-1) t(n_i) / (n_i (2^{n_i}-1)).
double tuple_sum(int rest, int m) {
  if (m == 0) return rest == 0 ? 1.0 : 0.0;
  const auto& c = ConstantTable::instance();
  double total = 0.0;
  for (int first = 2; first <= rest - 2 * (m - 1); ++first) {
    const double two = std::exp2(first);
    const double factor = (0.5 * two - 1.0) * c.t(first) / (first * (two - 1.0));
    total += factor * tuple_sum(rest - first, m - 1);
  }
  return total;
}

}  // namespace

double weighted_sum_multinomial_coefficient(int k) {
  if (k < 2) throw Error(ErrorKind::domain, "weighted sum needs k >= 2");
  const int total = k - 2;
  const auto& c = ConstantTable::instance();
  double sum = 0.0;
  double m_factorial = 1.0;
  for (int m = 0; 2 * m <= total; ++m) {
    if (m > 0) m_factorial *= m;
    double n_factorial = 1.0;
    for (int n = 0; n + 2 * m <= total; ++n) {
      if (n > 0) n_factorial *= n;
      const double weight = std::exp2(n + 2 * m) * std::pow(ConstantTable::log2, n) /
                            (n_factorial * m_factorial);
      sum += weight * tuple_sum(total - n, m);
    }
  }
  return c.t(2) * sum;
}

VerificationReport verify_weighted_sum(Workbench& wb, int k_max) {
  const auto& cfg = wb.config();
  const SumTable& plain = wb.oracle_table(false, k_max);
  const SumTable& star = wb.oracle_table(true, k_max);
  VerificationReport rep;
  rep.suite = "weighted-sum";
  rep.identity = "sum 2^{n-1} G0(k,n) = sum (-1)^{k-n-1} 2^{n-1} G0*(k,n) = [u^{k-2}] 2^{2u} t(2) exp(...)";
  for (int k = 2; k <= k_max; ++k) {
    Estimate lhs = Estimate::exact(0.0);
    Estimate lhs_star = Estimate::exact(0.0);
    for (int n = 1; n < k; ++n) {
      const double weight = std::exp2(n - 1);
      const double sign = (k - n - 1) % 2 ? -1.0 : 1.0;
      lhs = lhs + weight * plain.weight_depth(k, n);
      lhs_star = lhs_star + (sign * weight) * star.weight_depth(k, n);
    }
    const Estimate rhs = algebraic(weighted_sum_series_coefficient(k));
    const double tol = k <= 5 ? cfg.tol.base : cfg.tol.high_weight;
    const std::string kk = "k=" + std::to_string(k);
    rep.add(kk + " G0 sum vs series", lhs, rhs, tol);
    rep.add(kk + " G0* sum vs series", lhs_star, rhs, tol);
    rep.add(kk + " G0 sum vs G0* sum", lhs, lhs_star, tol);
    if (k <= 6) {
      rep.add(kk + " multinomial vs series", algebraic(weighted_sum_multinomial_coefficient(k)), rhs,
              kExpansionTol);
    }
  }
  if (k_max >= 3) {
    const Estimate t21 = oracle::eval_t(Index({2, 1}), cfg.cutoff);
    const Estimate lhs = algebraic(t_value_depth1(3)) + 2.0 * t21;
    const Estimate rhs = algebraic(2.0 * t_value_depth1(2) * ConstantTable::log2);
    rep.add("k=3 closed t(3) + 2 t(2,1) = 2 t(2) log 2", lhs, rhs, cfg.tol.closed_form);
  }
  return rep;
}

VerificationReport verify_ode(const Config& cfg) {
  VerificationReport rep;
  rep.suite = "ode";
  rep.identity = "second-order ODE and coupled first-order system residuals";
  const int valid = cfg.z_len - 2;  // top orders see the z truncation
  const Estimate zero = Estimate::exact(0.0);
  for (bool star : {false, true}) {
    const std::string tag = star ? "star " : "";
    const ZSeries f = genfun::build_z_series(star, cfg.degree_cap, cfg.z_len);
    const ZSeries r = genfun::ode_residual(f, star);
    for (int j = 0; j < valid; ++j) {
      rep.add(tag + "ode z^" + std::to_string(j), Estimate::exact(r[j].max_abs()), zero, cfg.tol.ode);
    }
    double even = 0.0;
    for (int j = 0; j < f.length(); j += 2) even = std::max(even, f[j].max_abs());
    rep.add(tag + "even coefficients", Estimate::exact(even), zero, 0.0);

    const ZSeries phi = genfun::recover_phi(f, star);
    rep.add(tag + "phi constant term", Estimate::exact((phi[0] - 1.0).max_abs()), zero, cfg.tol.ode);
    const ZSeries cr = genfun::coupled_residual(f, phi, star);
    for (int j = 0; j < valid; ++j) {
      rep.add(tag + "coupled z^" + std::to_string(j), Estimate::exact(cr[j].max_abs()), zero,
              cfg.tol.ode);
    }
  }
  return rep;
}

}  // namespace tvalue::identities
