#include "tvalue/extrapolation.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "tvalue/error.hpp"

namespace tvalue {

namespace {

// Solves the dense system M x = rhs (row-major, size n) with partial pivoting.
std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[best * n + col])) best = r;
    }
    if (m[best * n + col] == 0.0) throw Error(ErrorKind::domain, "singular tail-fit system");
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[best * n + c]);
      std::swap(rhs[col], rhs[best]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i * n + c] * x[c];
    x[i] = s / m[i * n + i];
  }
  return x;
}

}  // namespace

std::vector<long long> geometric_checkpoints(long long last, int count, bool odd) {
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(count));
  long long n = last;
  for (int i = 0; i < count; ++i) {
    long long point = n;
    if (odd && point % 2 == 0) --point;
    if (point < 1 || (!out.empty() && point >= out.back())) {
      throw Error(ErrorKind::domain,
                  "cutoff " + std::to_string(last) + " too small for " + std::to_string(count) +
                      " geometric checkpoints");
    }
    out.push_back(point);
    n /= 2;
  }
  return out;
}

TailFit::TailFit(std::span<const double> ns, TailModel model)
    : ns_(ns.begin(), ns.end()), model_(model) {
  const auto unknowns = static_cast<std::size_t>(model_.unknowns());
  if (ns_.size() < unknowns + 1) {
    throw Error(ErrorKind::domain, "tail fit needs " + std::to_string(unknowns + 1) +
                                       " checkpoints, got " + std::to_string(ns_.size()));
  }
  primary_ = limit_weights(0);
  shifted_ = limit_weights(1);
}

std::vector<double> TailFit::limit_weights(std::size_t offset) const {
  // Row r: S(N_r) = S_inf + sum beta_ij (N_r/N_0)^{-(decay+i)} x_r^j with
  // x_r = log2(N_r/N_0). The limit is e_0^T A^{-1} S, so the weights solve
  // A^T w = e_0.
  const auto n = static_cast<std::size_t>(model_.unknowns());
  const double n0 = ns_[offset];
  std::vector<double> a(n * n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const double ratio = ns_[offset + r] / n0;
    const double x = std::log2(ratio);
    a[r * n] = 1.0;
    std::size_t col = 1;
    for (int i = 0; i <= model_.inverse_powers; ++i) {
      const double scale = std::pow(ratio, -(model_.decay + i));
      double xp = 1.0;
      for (int j = 0; j <= model_.log_degree; ++j) {
        a[r * n + col++] = scale * xp;
        xp *= x;
      }
    }
  }
  std::vector<double> at(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) at[c * n + r] = a[r * n + c];
  std::vector<double> e0(n, 0.0);
  e0[0] = 1.0;
  return solve_dense(std::move(at), std::move(e0));
}

Extrapolated TailFit::apply(std::span<const double> partials) const {
  const auto eval = [&](const std::vector<double>& weights, std::size_t offset, double& spread) {
    double s = 0.0;
    spread = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      s += weights[i] * partials[offset + i];
      spread += std::abs(weights[i] * partials[offset + i]);
    }
    return s;
  };
  double spread_primary = 0.0;
  double spread_shifted = 0.0;
  const double primary = eval(primary_, 0, spread_primary);
  const double shifted = eval(shifted_, 1, spread_shifted);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double rounding = 16.0 * eps * spread_primary;
  return {primary, kSafety * std::abs(primary - shifted) + rounding};
}

Extrapolated extrapolate_limit(std::span<const Checkpoint> checkpoints, TailModel model) {
  std::vector<double> ns;
  std::vector<double> sums;
  ns.reserve(checkpoints.size());
  sums.reserve(checkpoints.size());
  for (const auto& cp : checkpoints) {
    ns.push_back(cp.n);
    sums.push_back(cp.partial_sum);
  }
  return TailFit(ns, model).apply(sums);
}

}  // namespace tvalue
