#include "tvalue/constants.hpp"

#include <cmath>

#include "tvalue/error.hpp"

namespace tvalue {

namespace {

// Cohen, Rodriguez Villegas, Zagier, Algorithm 1, applied to
// eta(s) = sum_{k>=0} (-1)^k (k+1)^-s. Error is about 5.8^-terms.
double eta_accelerated(int s) {
  constexpr int terms = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * std::pow(static_cast<double>(k + 1), -s);
    b *= static_cast<double>(k + terms) * static_cast<double>(k - terms) /
         ((static_cast<double>(k) + 0.5) * static_cast<double>(k + 1));
  }
  return sum / d;
}

double zeta_direct(int n) {
  if (n > 40) {
    // 6^-40 is far below double resolution.
    return 1.0 + std::exp2(-n) + std::pow(3.0, -n) + std::exp2(-2 * n) + std::pow(5.0, -n);
  }
  // zeta(n) = eta(n) / (1 - 2^{1-n}); for large n, -expm1 keeps the
  // denominator accurate.
  return eta_accelerated(n) / -std::expm1((1 - n) * std::numbers::ln2);
}

double t_direct(int n) {
  if (n > 20) {
    // (1 - 2^-n) zeta(n) loses the 3^-n tail to cancellation here; the odd
    // terms past 15 are below 17^-21 ~ 1e-26.
    double sum = 0.0;
    for (int m = 15; m >= 3; m -= 2) sum += std::pow(static_cast<double>(m), -n);
    return 1.0 + sum;
  }
  return -std::expm1(-n * std::numbers::ln2) * zeta_direct(n);
}

void require_at_least_two(int n) {
  if (n < 2) throw Error(ErrorKind::domain, "zeta/t need n >= 2, got " + std::to_string(n));
}

}  // namespace

ConstantTable::ConstantTable(int n_max) : n_max_(n_max) {
  if (n_max < 2) throw Error(ErrorKind::domain, "constant table needs n_max >= 2");
  zeta_.resize(static_cast<std::size_t>(n_max + 1), 0.0);
  t_.resize(zeta_.size(), 0.0);
  for (int n = 2; n <= n_max; ++n) {
    zeta_[static_cast<std::size_t>(n)] = zeta_direct(n);
    t_[static_cast<std::size_t>(n)] = t_direct(n);
  }
}

const ConstantTable& ConstantTable::instance() {
  static const ConstantTable table;
  return table;
}

double ConstantTable::zeta(int n) const {
  require_at_least_two(n);
  if (n <= n_max_) return zeta_[static_cast<std::size_t>(n)];
  return zeta_direct(n);
}

double ConstantTable::t(int n) const {
  require_at_least_two(n);
  if (n <= n_max_) return t_[static_cast<std::size_t>(n)];
  return t_direct(n);
}

double zeta(int n) { return ConstantTable::instance().zeta(n); }

double t_value_depth1(int n) { return ConstantTable::instance().t(n); }

}  // namespace tvalue
