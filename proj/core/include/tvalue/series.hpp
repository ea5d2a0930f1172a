#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tvalue {

/// Exponent triple of a monomial u^a v^b w^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const noexcept { return a + b + c; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Power series in (u,v,w) with real coefficients, truncated at total degree D.
///
/// Coefficients are stored densely in graded order (by total degree, then a,
/// then b), so every monomial precedes all of its multiples. Products and
/// quotients are exact modulo terms of total degree > D.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree_cap = 0);

  static TruncatedSeries constant(int degree_cap, double value);
  static TruncatedSeries monomial(int degree_cap, Monomial m, double coeff = 1.0);
  static TruncatedSeries u(int degree_cap) { return monomial(degree_cap, {1, 0, 0}); }
  static TruncatedSeries v(int degree_cap) { return monomial(degree_cap, {0, 1, 0}); }
  static TruncatedSeries w(int degree_cap) { return monomial(degree_cap, {0, 0, 1}); }

  int degree_cap() const noexcept { return cap_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Zero for monomials beyond the cap.
  double coeff(Monomial m) const noexcept;
  double coeff(int a, int b, int c) const noexcept { return coeff(Monomial{a, b, c}); }
  /// Throws Error(out_of_range) beyond the cap.
  void set(Monomial m, double value);
  double constant_term() const noexcept { return coeffs_[0]; }

  std::span<const double> data() const noexcept { return coeffs_; }
  std::span<double> data() noexcept { return coeffs_; }

  /// Storage slot of a monomial with degree() <= cap.
  static std::size_t offset(Monomial m) noexcept;
  /// Monomial stored in slot i.
  Monomial monomial_at(std::size_t i) const noexcept { return layout()[i]; }

  /// Same coefficients re-truncated (or zero-padded) to `degree_cap`.
  TruncatedSeries with_cap(int degree_cap) const;

  /// Largest |coefficient|.
  double max_abs() const noexcept;

  TruncatedSeries& operator+=(const TruncatedSeries& g);
  TruncatedSeries& operator-=(const TruncatedSeries& g);
  TruncatedSeries& operator*=(double s) noexcept;
  TruncatedSeries& operator+=(double s) noexcept {
    coeffs_[0] += s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) { return f += g; }
  friend TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) { return f -= g; }
  friend TruncatedSeries operator*(TruncatedSeries f, double s) { return f *= s; }
  friend TruncatedSeries operator*(double s, TruncatedSeries f) { return f *= s; }
  friend TruncatedSeries operator+(TruncatedSeries f, double s) { return f += s; }
  friend TruncatedSeries operator+(double s, TruncatedSeries f) { return f += s; }
  friend TruncatedSeries operator-(TruncatedSeries f, double s) { return f += -s; }
  friend TruncatedSeries operator-(double s, TruncatedSeries f) {
    f *= -1.0;
    return f += s;
  }
  TruncatedSeries operator-() const { return *this * -1.0; }

  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

 private:
  const std::vector<Monomial>& layout() const;

  int cap_;
  std::vector<double> coeffs_;
};

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Quotient f / g; g needs a nonzero constant term (Error(non_invertible)).
/// Cost is proportional to size * (number of nonzero terms of g).
TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g);

/// 1/f; Error(non_invertible) when the constant term is zero.
TruncatedSeries inverse(const TruncatedSeries& f);

/// exp(f) for f with zero constant term (Error(domain) otherwise).
TruncatedSeries exp(const TruncatedSeries& f);

/// Power sums p_n = x^n + y^n of the roots of X^2 - e1 X + e2, for
/// 0 <= n <= n_max (p_0 = 2), by Newton's recurrence. The roots themselves are
/// never formed.
std::vector<TruncatedSeries> power_sums(const TruncatedSeries& e1, const TruncatedSeries& e2,
                                        int n_max);

/// Throws Error(shape) unless both operands share a truncation cap.
void require_same_cap(const TruncatedSeries& f, const TruncatedSeries& g);

/// Polynomial in z with TruncatedSeries coefficients, truncated at length L
/// (z^0 .. z^{L-1}). All coefficients share one degree cap.
class ZSeries {
 public:
  ZSeries(int length, int degree_cap);

  int length() const noexcept { return static_cast<int>(coeffs_.size()); }
  int degree_cap() const noexcept { return cap_; }

  const TruncatedSeries& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  TruncatedSeries& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

  ZSeries& operator+=(const ZSeries& g);
  ZSeries& operator-=(const ZSeries& g);
  friend ZSeries operator+(ZSeries f, const ZSeries& g) { return f += g; }
  friend ZSeries operator-(ZSeries f, const ZSeries& g) { return f -= g; }

  /// Multiplies every z-coefficient by a (u,v,w) series.
  ZSeries scaled(const TruncatedSeries& s) const;

  /// Largest |coefficient| over z-orders [0, max_order).
  double max_abs(int max_order) const;

 private:
  int cap_;
  std::vector<TruncatedSeries> coeffs_;
};

/// Exact d/dz; the top coefficient becomes zero.
ZSeries z_differentiate(const ZSeries& f);

/// f(z) * p(z) truncated at f.length(); p[j] is the coefficient of z^j.
ZSeries z_shift_multiply(const ZSeries& f, std::span<const TruncatedSeries> p);

/// Convenience form for polynomials with scalar coefficients, e.g. {0,1,0,-1}
/// for z(1 - z^2).
ZSeries z_shift_multiply(const ZSeries& f, std::span<const double> p);

}  // namespace tvalue
