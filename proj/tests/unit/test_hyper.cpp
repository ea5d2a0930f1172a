#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "tvalue/error.hpp"
#include "tvalue/hyper.hpp"

using namespace tvalue;
using namespace tvalue::hyper;
using std::numbers::pi;

namespace {

const double kSqrtPi = std::sqrt(pi);
constexpr double kEuler = 0.5772156649015329;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::domain;
}

}  // namespace

TEST_CASE("pochhammer") {
  double factorial = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n) factorial *= n;
    CHECK(pochhammer(1.0, n) == factorial);
  }
  CHECK(pochhammer(0.5, 3) == 15.0 / 8.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> a_dist(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double a = a_dist(rng);
    const int n = i % 12;
    CHECK(pochhammer(a, n + 1) == doctest::Approx(pochhammer(a, n) * (a + n)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(pochhammer(1.0, -1), Error);
}

TEST_CASE("eval_pfq examples") {
  CHECK(std::abs(eval_pfq({{0.5, 1.7}, {1.7}, 0.3}).value - 1.1952286093343936) < 1e-14);
  const auto unit = eval_pfq({{0.5, 0.5, 1.0}, {1.5, 1.5}, 1.0});
  CHECK(std::abs(unit.value - pi * pi / 8) < 1e-12);
  CHECK(std::abs(unit.value - pi * pi / 8) <= unit.err_bound + 1e-15);
  CHECK(eval_pfq({{0.3, 7.0, -1.5}, {2.5}, 0.0}).value == 1.0);
  CHECK(std::abs(eval_pfq({{1.0, 1.0}, {2.0}, 0.5}).value - 2.0 * std::numbers::ln2) < 1e-14);
  // Terminating: 2F1(-3, b; c; z) is a cubic.
  const double b = 0.7, c = 1.9, z = 2.5;
  const double cubic = 1 - 3 * b / c * z + 3 * b * (b + 1) / (c * (c + 1)) * z * z -
                       b * (b + 1) * (b + 2) / (c * (c + 1) * (c + 2)) * z * z * z;
  const auto term = eval_pfq({{-3.0, b}, {c}, z});
  CHECK(term.value == doctest::Approx(cubic).epsilon(1e-14));
  CHECK(term.err_bound < 1e-15);
}

TEST_CASE("eval_pfq errors") {
  CHECK(kind_of([] { eval_pfq({{1.0}, {-2.0}, 0.5}); }) == ErrorKind::pole);
  CHECK(kind_of([] { eval_pfq({{1.0}, {0.0}, 0.5}); }) == ErrorKind::pole);
  CHECK(kind_of([] { eval_pfq({{1.0}, {2.0}, 1.5}); }) == ErrorKind::divergent);
  CHECK(kind_of([] { eval_pfq({{1.0, 1.0}, {2.0}, 1.0}); }) == ErrorKind::divergent);
  CHECK(kind_of([] { eval_pfq({{1.0, 1.0, 1.0}, {2.0}, 0.1}); }) == ErrorKind::divergent);
  CHECK(kind_of([] { eval_pfq({{0.5, 0.5}, {2.0}, -1.0}); }) == ErrorKind::domain);
}

TEST_CASE("3F2 at unit argument, closed form") {
  CHECK(std::abs(sum_3f2_unit(0.5, 0.5, 1.5) - pi * pi / 8) < 1e-13);
  CHECK(std::abs(sum_3f2_unit(0.3, 0.4, 1.2) - 1.1312023048127868) < 1e-13);
  CHECK(std::abs(sum_3f2_unit(0.3, 0.4, 1.2) - eval_pfq({{0.3, 0.4, 1.0}, {1.2, 1.5}, 1.0}).value) <
        1e-10);
  CHECK(std::abs(sum_3f2_unit(0.3, 0.7, 1.4) - 1.1947935331836805) < 1e-13);
  // 1 + a - c = 0 alone: removable singularity.
  CHECK(std::abs(sum_3f2_unit(0.4, 0.7, 1.4) - 1.2519369248280361) < 1e-12);
  CHECK(kind_of([] { sum_3f2_unit(0.5, 0.5, 0.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { sum_3f2_unit(0.5, 0.5, 3.0); }) == ErrorKind::pole);
}

TEST_CASE("Dixon's theorem") {
  CHECK(std::abs(dixon_3f2(1.0, 0.5, 0.55) - 1.2868076341026032) < 1e-13);
  CHECK(std::abs(dixon_3f2(1.0, 0.5, 0.55) - eval_pfq({{1.0, 0.5, 0.55}, {1.5, 1.45}, 1.0}).value) < 1e-10);
  CHECK(std::abs(dixon_3f2(1.0, 0.5, 0.5) - pi * pi / 8) < 1e-13);
  CHECK(std::abs(dixon_3f2(0.5, 0.2, 0.1) - 1.007251006100703) < 1e-13);
  CHECK(kind_of([] { dixon_3f2(0.0, 0.5, 0.5); }) == ErrorKind::divergent);
  CHECK(kind_of([] { dixon_3f2(1.0, 3.0, 0.1); }) == ErrorKind::divergent);
}

TEST_CASE("Gamma expansions") {
  CHECK(gamma_one_minus(0.0).value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_half_minus_half(0.0).value == doctest::Approx(kSqrtPi).epsilon(1e-15));
  CHECK(std::abs(gamma_one_minus(0.5).value - kSqrtPi) < 1e-13);
  const double z = 0.3;
  const double lhs = gamma_half_minus_half(z).value;
  const double rhs = kSqrtPi * std::exp2(z) * gamma_one_minus(z).value / gamma_one_minus(z / 2).value;
  CHECK(std::abs(lhs - rhs) < 1e-10);
  CHECK(kind_of([] { gamma_one_minus(1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { gamma_half_minus_half(-1.2); }) == ErrorKind::domain);
}

TEST_CASE("Gamma, digamma and trigamma on the real line") {
  CHECK(std::abs(hyper::gamma(0.3) - 2.9915689876875907) < 1e-13);
  CHECK(std::abs(hyper::gamma(1.7) - 0.9086387328532904) < 1e-14);
  CHECK(std::abs(hyper::gamma(-0.5) + 2.0 * kSqrtPi) < 1e-13);
  CHECK(std::abs(hyper::gamma(-1.3) - 3.3283470067886093) < 1e-12);
  CHECK(hyper::gamma(4.5) == doctest::Approx(11.631728396567449).epsilon(1e-14));
  CHECK(hyper::gamma(6.0) == doctest::Approx(120.0).epsilon(1e-14));
  CHECK(std::abs(hyper::digamma(1.0) + kEuler) < 1e-14);
  CHECK(std::abs(hyper::digamma(0.5) + kEuler + 2 * std::numbers::ln2) < 1e-14);
  CHECK(std::abs(hyper::digamma(0.3) + 3.502524222200133) < 1e-13);
  CHECK(std::abs(hyper::trigamma(1.0) - pi * pi / 6) < 1e-14);
  CHECK(std::abs(hyper::trigamma(0.5) - pi * pi / 2) < 1e-13);
  CHECK(std::abs(hyper::trigamma(2.5) - 0.4903577561002349) < 1e-14);
  CHECK(kind_of([] { hyper::gamma(-2.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { hyper::digamma(0.0); }) == ErrorKind::pole);
}
