#include <doctest.h>

#include <cmath>
#include <random>

#include "tvalue/error.hpp"
#include "tvalue/series.hpp"

using namespace tvalue;
using S = TruncatedSeries;

namespace {

S random_series(int cap, std::mt19937_64& rng, double scale = 0.5, bool zero_constant = false) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  S f(cap);
  for (double& c : f.data()) c = dist(rng);
  if (zero_constant) f.set({0, 0, 0}, 0.0);
  return f;
}

double distance(const S& f, const S& g) { return (f - g).max_abs(); }

}  // namespace

TEST_CASE("layout is a graded bijection") {
  for (int cap : {0, 1, 4, 8}) {
    const S f(cap);
    CHECK(f.size() == static_cast<std::size_t>((cap + 1) * (cap + 2) * (cap + 3) / 6));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Monomial m = f.monomial_at(i);
      CHECK(S::offset(m) == i);
      CHECK(m.degree() <= cap);
      if (i) CHECK(f.monomial_at(i - 1).degree() <= m.degree());
    }
  }
}

TEST_CASE("arithmetic examples") {
  const int D = 6;
  S geometric(D);
  for (int a = 0; a <= D; ++a) geometric.set({a, 0, 0}, 1.0);
  CHECK(distance((1.0 - S::u(D)) * geometric, S::constant(D, 1.0)) < 1e-15);
  CHECK((S::u(1) * S::v(1)).max_abs() == 0.0);
  const S sq = (S::u(3) + S::v(3)) * (S::u(3) + S::v(3));
  CHECK(sq.coeff(2, 0, 0) == 1.0);
  CHECK(sq.coeff(1, 1, 0) == 2.0);
  CHECK(sq.coeff(0, 2, 0) == 1.0);
  CHECK(sq.max_abs() == 2.0);
  CHECK(sq.coeff(9, 0, 0) == 0.0);
}

TEST_CASE("inverse examples") {
  const S inv = inverse(1.0 - S::u(5));
  for (int a = 0; a <= 5; ++a) CHECK(inv.coeff(a, 0, 0) == 1.0);
  CHECK(inv.coeff(1, 1, 0) == 0.0);
  CHECK(inverse(S::constant(3, 4.0)).constant_term() == 0.25);
  const S g = 1.0 - S::u(6) - S::v(6) + S::u(6) * S::v(6) - S::w(6);
  CHECK(distance(g * inverse(g), S::constant(6, 1.0)) < 1e-14);
  CHECK_THROWS_AS(inverse(S::u(3)), Error);
}

TEST_CASE("exp examples") {
  const S e = exp(S::u(3));
  CHECK(e.coeff(0, 0, 0) == 1.0);
  CHECK(e.coeff(1, 0, 0) == 1.0);
  CHECK(e.coeff(2, 0, 0) == doctest::Approx(0.5));
  CHECK(e.coeff(3, 0, 0) == doctest::Approx(1.0 / 6));
  CHECK(distance(exp(S(4)), S::constant(4, 1.0)) == 0.0);
  CHECK_THROWS_AS(exp(S::constant(2, 1.0)), Error);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int D = 1 + trial % 7;
    const S f = random_series(D, rng), g = random_series(D, rng), h = random_series(D, rng);
    CHECK(distance(f * g, g * f) < 1e-14);
    CHECK(distance((f * g) * h, f * (g * h)) < 1e-13);
    CHECK(distance(f * (g + h), f * g + f * h) < 1e-13);
    CHECK(distance(f + g - g, f) < 1e-15);
    CHECK(distance(f * S::constant(D, 1.0), f) == 0.0);
    CHECK(distance(mul(f, g), f * g) == 0.0);
  }
}

TEST_CASE("inverse, division and exp properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int D = 1 + trial % 8;
    S f = random_series(D, rng, 0.3);
    f.set({0, 0, 0}, 1.0 + 0.5 * trial / 20.0);
    const S g = random_series(D, rng);
    CHECK(distance(inverse(inverse(f)), f) < 1e-12);
    CHECK(distance(divide(g, f) * f, g) < 1e-12);
    const S z = random_series(D, rng, 0.3, true);
    CHECK(distance(exp(z) * exp(-z), S::constant(D, 1.0)) < 1e-13);
    const S z2 = random_series(D, rng, 0.3, true);
    CHECK(distance(exp(z + z2), exp(z) * exp(z2)) < 1e-13);
  }
}

TEST_CASE("power sums") {
  const int D = 4;
  const auto p = power_sums(S::u(D), S::w(D), 4);
  CHECK(p[0].constant_term() == 2.0);
  CHECK(distance(p[1], S::u(D)) == 0.0);
  CHECK(distance(p[2], S::u(D) * S::u(D) - 2.0 * S::w(D)) == 0.0);
  CHECK(distance(p[3], S::u(D) * S::u(D) * S::u(D) - 3.0 * S::u(D) * S::w(D)) == 0.0);

  const auto q = power_sums(S::constant(0, 5.0), S::constant(0, 6.0), 6);
  for (int n = 0; n <= 6; ++n) CHECK(q[static_cast<std::size_t>(n)].constant_term() == std::exp2(n) + std::pow(3.0, n));

  // Newton's recurrence p_n = e1 p_{n-1} - e2 p_{n-2} on random symmetric data.
  std::mt19937_64 rng(3);
  const S e1 = random_series(5, rng), e2 = random_series(5, rng);
  const auto r = power_sums(e1, e2, 8);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(distance(r[n], e1 * r[n - 1] - e2 * r[n - 2]) < 1e-13);
}

TEST_CASE("caps and shape errors") {
  CHECK_THROWS_AS(S(33), Error);
  CHECK_THROWS_AS(S(-1), Error);
  S f(2);
  CHECK_THROWS_AS(f.set({3, 0, 0}, 1.0), Error);
  CHECK_THROWS_AS(S(2) + S(3), Error);
  CHECK_THROWS_AS(S(2) * S(3), Error);
  CHECK_THROWS_AS(require_same_cap(S(1), S(2)), Error);
  const S g = exp(S::u(5)).with_cap(2);
  CHECK(g.degree_cap() == 2);
  CHECK(g.coeff(2, 0, 0) == doctest::Approx(0.5));
}

TEST_CASE("z-series operations") {
  const int D = 2;
  ZSeries f(6, D);
  const S c = 1.0 + S::u(D) + 2.0 * S::w(D);
  f[3] = c;
  const ZSeries df = z_differentiate(f);
  CHECK(distance(df[2], 3.0 * c) == 0.0);
  CHECK(df[3].max_abs() == 0.0);
  CHECK(df[5].max_abs() == 0.0);

  ZSeries z(6, D);
  z[1] = S::constant(D, 1.0);
  const std::vector<double> poly{0.0, 1.0, 0.0, -1.0};  // z(1 - z^2)
  const ZSeries prod = z_shift_multiply(z, poly);
  CHECK(prod[2].constant_term() == 1.0);
  CHECK(prod[4].constant_term() == -1.0);
  CHECK(prod[1].max_abs() + prod[3].max_abs() + prod[5].max_abs() == 0.0);
  CHECK(prod.max_abs(6) == 1.0);

  std::vector<S> spoly{S::u(D), S::constant(D, 2.0)};
  const ZSeries sp = z_shift_multiply(z, spoly);
  CHECK(distance(sp[1], S::u(D)) == 0.0);
  CHECK(sp[2].constant_term() == 2.0);
  CHECK(distance(z.scaled(S::v(D))[1], S::v(D)) == 0.0);
}
