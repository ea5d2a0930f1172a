#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tvalue/constants.hpp"
#include "tvalue/error.hpp"

using namespace tvalue;
using std::numbers::pi;

TEST_CASE("zeta at small arguments") {
  CHECK(std::abs(zeta(2) - pi * pi / 6) < 1e-15);
  CHECK(std::abs(zeta(4) - std::pow(pi, 4) / 90) < 1e-15);
  CHECK(std::abs(zeta(3) - 1.2020569031595943) < 1e-15);
  CHECK(std::abs(zeta(6) - std::pow(pi, 6) / 945) < 1e-15);
}

TEST_CASE("zeta at large arguments approaches 1") {
  CHECK(std::abs(zeta(40) - (1.0 + std::exp2(-40) + std::pow(3.0, -40))) < 1e-16);
  CHECK(zeta(64) == 1.0);  // 1 + 2^-64 rounds to 1
}

TEST_CASE("depth-one t-values") {
  CHECK(std::abs(t_value_depth1(2) - 1.2337005501361697) < 1e-15);
  CHECK(std::abs(t_value_depth1(3) - 1.0517997902646449) < 1e-15);
  CHECK(std::abs(t_value_depth1(4) - std::pow(pi, 4) / 96) < 1e-15);
  double prev = t_value_depth1(2);
  for (int n = 3; n <= 80; ++n) {
    const double t = t_value_depth1(n);
    // 3^-n drops below the resolution of 1 past n = 33.
    if (n <= 30) {
      CHECK(t > 1.0);
      CHECK(t < prev);
    } else {
      CHECK(t >= 1.0);
      CHECK(t <= prev);
    }
    prev = t;
  }
  CHECK(t_value_depth1(80) == 1.0);
}

TEST_CASE("large-n t-values keep the 3^-n term") {
  for (int n : {18, 21, 25, 30}) {
    const double direct = 1.0 + std::pow(3.0, -n) + std::pow(5.0, -n) + std::pow(7.0, -n);
    CHECK(std::abs(t_value_depth1(n) - direct) <= 4.5e-16);  // two ulps
  }
}

TEST_CASE("t(6) against summation over odd integers") {
  double sum = 0.0;
  for (long m = 19999; m >= 1; m -= 2) sum += std::pow(static_cast<double>(m), -6);
  // Tail over odd m > 19999 is about 20000^-5 / 10.
  CHECK(std::abs(t_value_depth1(6) - sum) < 1e-15);
}

TEST_CASE("table matches free functions and extends on demand") {
  const ConstantTable table(10);
  for (int n = 2; n <= 10; ++n) {
    CHECK(table.zeta(n) == zeta(n));
    CHECK(table.t(n) == t_value_depth1(n));
  }
  CHECK(table.zeta(30) == zeta(30));
  CHECK(ConstantTable::instance().n_max() == ConstantTable::kDefaultMax);
}

TEST_CASE("domain errors") {
  for (int n : {1, 0, -3}) {
    CHECK_THROWS_AS(zeta(n), Error);
    CHECK_THROWS_AS(t_value_depth1(n), Error);
    CHECK_THROWS_AS(ConstantTable::instance().t(n), Error);
  }
}
