#include "tvalue/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tvalue/error.hpp"

namespace tvalue {

namespace {

constexpr int kMaxCap = 32;

std::size_t count_up_to(int degree) {
  // Number of monomials of total degree <= degree.
  const auto d = static_cast<std::size_t>(degree + 1);
  return d * (d + 1) * (d + 2) / 6;
}

// Graded layout for the largest supported cap; smaller caps use a prefix.
const std::vector<Monomial>& global_layout() {
  static const std::vector<Monomial> layout = [] {
    std::vector<Monomial> out;
    out.reserve(count_up_to(kMaxCap));
    for (int d = 0; d <= kMaxCap; ++d)
      for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d - a; ++b) out.push_back({a, b, d - a - b});
    return out;
  }();
  return layout;
}

bool contains(const Monomial& outer, const Monomial& inner) {
  return outer.a >= inner.a && outer.b >= inner.b && outer.c >= inner.c;
}

Monomial minus(const Monomial& x, const Monomial& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }

struct Term {
  Monomial m;
  double coeff;
};

std::vector<Term> nonzero_terms(const TruncatedSeries& f) {
  std::vector<Term> out;
  const auto data = f.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i] != 0.0) out.push_back({f.monomial_at(i), data[i]});
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int degree_cap) : cap_(degree_cap) {
  if (degree_cap < 0 || degree_cap > kMaxCap) {
    throw Error(ErrorKind::domain, "degree cap must lie in [0, " + std::to_string(kMaxCap) + "]");
  }
  coeffs_.assign(count_up_to(degree_cap), 0.0);
}

TruncatedSeries TruncatedSeries::constant(int degree_cap, double value) {
  TruncatedSeries f(degree_cap);
  f.coeffs_[0] = value;
  return f;
}

TruncatedSeries TruncatedSeries::monomial(int degree_cap, Monomial m, double coeff) {
  TruncatedSeries f(degree_cap);
  if (m.degree() <= degree_cap) f.set(m, coeff);
  return f;
}

std::size_t TruncatedSeries::offset(Monomial m) noexcept {
  const int d = m.degree();
  const std::size_t base = d == 0 ? 0 : count_up_to(d - 1);
  // Within degree d: a blocks of sizes d+1, d, ..., then b.
  const auto a = static_cast<std::size_t>(m.a);
  const auto dd = static_cast<std::size_t>(d);
  const std::size_t before_a = a == 0 ? 0 : a * (dd + 1) - a * (a - 1) / 2;
  return base + before_a + static_cast<std::size_t>(m.b);
}

const std::vector<Monomial>& TruncatedSeries::layout() const { return global_layout(); }

double TruncatedSeries::coeff(Monomial m) const noexcept {
  if (m.a < 0 || m.b < 0 || m.c < 0 || m.degree() > cap_) return 0.0;
  return coeffs_[offset(m)];
}

void TruncatedSeries::set(Monomial m, double value) {
  if (m.a < 0 || m.b < 0 || m.c < 0 || m.degree() > cap_) {
    throw Error(ErrorKind::out_of_range, "monomial degree " + std::to_string(m.degree()) +
                                             " beyond cap " + std::to_string(cap_));
  }
  coeffs_[offset(m)] = value;
}

TruncatedSeries TruncatedSeries::with_cap(int degree_cap) const {
  TruncatedSeries g(degree_cap);
  const std::size_t n = std::min(g.coeffs_.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, g.coeffs_.begin());
  return g;
}

double TruncatedSeries::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

void require_same_cap(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.degree_cap() != g.degree_cap()) {
    throw Error(ErrorKind::shape, "degree caps differ: " + std::to_string(f.degree_cap()) +
                                      " vs " + std::to_string(g.degree_cap()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
  require_same_cap(*this, g);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& g) {
  require_same_cap(*this, g);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(double s) noexcept {
  for (double& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_cap(f, g);
  const int cap = f.degree_cap();
  TruncatedSeries h(cap);
  const auto sparse = nonzero_terms(g);
  const auto fd = f.data();
  auto hd = h.data();
  for (std::size_t i = 0; i < fd.size(); ++i) {
    if (fd[i] == 0.0) continue;
    const Monomial mi = f.monomial_at(i);
    for (const Term& t : sparse) {
      const Monomial m{mi.a + t.m.a, mi.b + t.m.b, mi.c + t.m.c};
      if (m.degree() > cap) continue;
      hd[TruncatedSeries::offset(m)] += fd[i] * t.coeff;
    }
  }
  return h;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) { return f * g; }

TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_cap(f, g);
  const double g0 = g.constant_term();
  if (g0 == 0.0) throw Error(ErrorKind::non_invertible, "divisor has zero constant term");
  auto sparse = nonzero_terms(g);
  sparse.erase(sparse.begin());  // drop the constant term
  TruncatedSeries h(f.degree_cap());
  auto hd = h.data();
  const auto fd = f.data();
  // Graded order: every h coefficient needed on the right is already final.
  for (std::size_t i = 0; i < hd.size(); ++i) {
    const Monomial m = h.monomial_at(i);
    double s = fd[i];
    for (const Term& t : sparse) {
      if (contains(m, t.m)) s -= t.coeff * hd[TruncatedSeries::offset(minus(m, t.m))];
    }
    hd[i] = s / g0;
  }
  return h;
}

TruncatedSeries inverse(const TruncatedSeries& f) {
  return divide(TruncatedSeries::constant(f.degree_cap(), 1.0), f);
}

TruncatedSeries exp(const TruncatedSeries& f) {
  if (f.constant_term() != 0.0) {
    throw Error(ErrorKind::domain, "exp needs a series with zero constant term");
  }
  // With E the total-degree operator, E exp(f) = exp(f) E f, i.e.
  // deg(m) g_m = sum_t deg(t) f_t g_{m-t}.
  const auto sparse = nonzero_terms(f);
  TruncatedSeries g(f.degree_cap());
  auto gd = g.data();
  gd[0] = 1.0;
  for (std::size_t i = 1; i < gd.size(); ++i) {
    const Monomial m = g.monomial_at(i);
    double s = 0.0;
    for (const Term& t : sparse) {
      if (contains(m, t.m)) s += t.m.degree() * t.coeff * gd[TruncatedSeries::offset(minus(m, t.m))];
    }
    gd[i] = s / m.degree();
  }
  return g;
}

std::vector<TruncatedSeries> power_sums(const TruncatedSeries& e1, const TruncatedSeries& e2,
                                        int n_max) {
  require_same_cap(e1, e2);
  if (n_max < 0) throw Error(ErrorKind::domain, "power_sums needs n_max >= 0");
  std::vector<TruncatedSeries> p;
  p.reserve(static_cast<std::size_t>(n_max + 1));
  p.push_back(TruncatedSeries::constant(e1.degree_cap(), 2.0));
  if (n_max >= 1) p.push_back(e1);
  for (int n = 2; n <= n_max; ++n) {
    p.push_back(e1 * p[static_cast<std::size_t>(n - 1)] - e2 * p[static_cast<std::size_t>(n - 2)]);
  }
  return p;
}

ZSeries::ZSeries(int length, int degree_cap) : cap_(degree_cap) {
  if (length < 1) throw Error(ErrorKind::domain, "z-series length must be positive");
  coeffs_.assign(static_cast<std::size_t>(length), TruncatedSeries(degree_cap));
}

ZSeries& ZSeries::operator+=(const ZSeries& g) {
  if (g.length() != length() || g.cap_ != cap_) throw Error(ErrorKind::shape, "z-series shapes differ");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += g.coeffs_[j];
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& g) {
  if (g.length() != length() || g.cap_ != cap_) throw Error(ErrorKind::shape, "z-series shapes differ");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= g.coeffs_[j];
  return *this;
}

ZSeries ZSeries::scaled(const TruncatedSeries& s) const {
  ZSeries out(length(), cap_);
  for (int j = 0; j < length(); ++j) out[j] = (*this)[j] * s;
  return out;
}

double ZSeries::max_abs(int max_order) const {
  double m = 0.0;
  for (int j = 0; j < std::min(max_order, length()); ++j) m = std::max(m, (*this)[j].max_abs());
  return m;
}

ZSeries z_differentiate(const ZSeries& f) {
  ZSeries out(f.length(), f.degree_cap());
  for (int j = 0; j + 1 < f.length(); ++j) out[j] = f[j + 1] * static_cast<double>(j + 1);
  return out;
}

ZSeries z_shift_multiply(const ZSeries& f, std::span<const TruncatedSeries> p) {
  ZSeries out(f.length(), f.degree_cap());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    require_same_cap(p[static_cast<std::size_t>(i)], f[0]);
    for (int j = 0; j + i < f.length(); ++j) out[i + j] += f[j] * p[static_cast<std::size_t>(i)];
  }
  return out;
}

ZSeries z_shift_multiply(const ZSeries& f, std::span<const double> p) {
  ZSeries out(f.length(), f.degree_cap());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    const double c = p[static_cast<std::size_t>(i)];
    if (c == 0.0) continue;
    for (int j = 0; j + i < f.length(); ++j) out[i + j] += f[j] * c;
  }
  return out;
}

}  // namespace tvalue
