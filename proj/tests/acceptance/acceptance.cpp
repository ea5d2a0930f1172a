// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "tvalue/constants.hpp"
#include "tvalue/hyper.hpp"
#include "tvalue/identities.hpp"

using namespace tvalue;
namespace id = tvalue::identities;

namespace {

// Pinned thresholds.
constexpr double kConstantTermTol = 1e-7;
constexpr double kClosedFormRelTol = 1e-9;
constexpr double kInstantiationTol = 1e-10;
constexpr double kDuplicationTol = 1e-10;
constexpr double kTheoremRuntimeSeconds = 600.0;
constexpr int kGridPoints = 20;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) { return format_number(x); }

Outcome from_reports(std::initializer_list<VerificationReport> reports) {
  Outcome o{true, ""};
  std::size_t cases = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    o.pass = o.pass && r.overall_pass;
    cases += r.cases.size();
    worst = std::max(worst, r.max_abs_diff());
    if (!r.overall_pass) print_summary(std::cerr, r);
  }
  o.detail = std::to_string(cases) + " cases, max |diff| " + fmt(worst);
  return o;
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Outcome hypergeometric_forms() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ab(0.1, 1.5), cc(0.2, 2.0), da(0.5, 2.0), dbc(0.05, 0.5);
  double worst = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double a = ab(rng), b = ab(rng), c = cc(rng);
    const double closed = hyper::sum_3f2_unit(a, b, c);
    const double series = hyper::eval_pfq({{a, b, 1.0}, {c, 2.0 + a + b - c}, 1.0}).value;
    worst = std::max(worst, relative(closed, series));
  }
  double worst_dixon = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double a = da(rng), b = dbc(rng), c = dbc(rng);
    const double closed = hyper::dixon_3f2(a, b, c);
    const double series = hyper::eval_pfq({{a, b, c}, {1.0 + a - b, 1.0 + a - c}, 1.0}).value;
    worst_dixon = std::max(worst_dixon, relative(closed, series));
  }
  // a = alpha, b = beta, c = 3/2 at u = v = w = 0 (alpha = beta = 1/2), and
  // Dixon with a = 1, b = 1/2, c = (1+u)/2 at u = 0.1.
  const double inst1 = hyper::sum_3f2_unit(0.5, 0.5, 1.5);
  const double inst1_series = hyper::eval_pfq({{0.5, 0.5, 1.0}, {1.5, 1.5}, 1.0}).value;
  const double inst2 = hyper::dixon_3f2(1.0, 0.5, 0.55);
  const double inst2_series = hyper::eval_pfq({{1.0, 0.5, 0.55}, {1.5, 1.45}, 1.0}).value;
  const double d1 = std::abs(inst1 - inst1_series);
  const double d2 = std::abs(inst2 - inst2_series);
  const bool pass = worst <= kClosedFormRelTol && worst_dixon <= kClosedFormRelTol &&
                    d1 <= kInstantiationTol && d2 <= kInstantiationTol;
  return {pass, "3F2 unit rel " + fmt(worst) + ", Dixon rel " + fmt(worst_dixon) +
                    ", instantiations " + fmt(d1) + " / " + fmt(d2)};
}

Outcome gamma_duplication() {
  // Gamma((1-z)/2) Gamma(1-z/2) = 2^z sqrt(pi) Gamma(1-z).
  double worst = 0.0;
  for (int i = -5; i <= 5; ++i) {
    const double z = 0.1 * i;
    const double lhs = hyper::gamma_half_minus_half(z).value * hyper::gamma_one_minus(0.5 * z).value;
    const double rhs = std::exp2(z) * std::sqrt(ConstantTable::pi) * hyper::gamma_one_minus(z).value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst <= kDuplicationTol, "11 points, max residual " + fmt(worst)};
}

}  // namespace

int main() {
  id::Config cfg;
  id::Workbench wb(cfg);
  int failed = 0;

  const auto line = [&](int number, const std::string& name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << name << ": " << o.detail
              << " (" << time_buf << ")" << std::endl;
  };

  line(1, "theorem1 coefficients, k <= 8", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = from_reports({id::verify_theorem_main(wb, false, 8)});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.pass = o.pass && secs <= kTheoremRuntimeSeconds;
    return o;
  });
  line(2, "theorem2 coefficients, k <= 8", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = from_reports({id::verify_theorem_main(wb, true, 8)});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.pass = o.pass && secs <= kTheoremRuntimeSeconds;
    return o;
  });
  line(3, "constant term equals pi^2/8", [&] {
    const double target = ConstantTable::pi * ConstantTable::pi / 8.0;
    const double plain = wb.phi0(false).value.constant_term();
    const double star = wb.phi0(true).value.constant_term();
    const double d1 = std::abs(plain - target);
    const double d2 = std::abs(star - plain);
    return Outcome{d1 <= kConstantTermTol && std::abs(star - target) <= kConstantTermTol &&
                       d2 <= kConstantTermTol,
                   "|plain - pi^2/8| " + fmt(d1) + ", |star - plain| " + fmt(d2)};
  });
  line(4, "ODE and coupled-system residuals", [&] { return from_reports({id::verify_ode(cfg)}); });
  line(5, "maximal-height exponential formulas, k <= 10", [&] {
    return from_reports({id::verify_max_height(wb, false, 10), id::verify_max_height(wb, true, 10)});
  });
  line(6, "product of maximal-height series, k <= 10",
       [&] { return from_reports({id::verify_product_identity(wb, 10)}); });
  line(7, "u = 0 specializations, n <= 4", [&] {
    return from_reports({id::verify_u0_specialization(wb, false, 4),
                         id::verify_u0_specialization(wb, true, 4)});
  });
  line(8, "weighted sum over depth, k <= 8", [&] { return from_reports({id::verify_weighted_sum(wb, 8)}); });
  line(9, "3F2 closed forms against series", hypergeometric_forms);
  line(10, "Gamma duplication through both expansions", gamma_duplication);
  line(11, "height-one (m+1)F(m) route, m <= 4, n <= 4", [&] {
    return from_reports({id::verify_height_one(wb, false, 8, 4, 4), id::verify_height_one(wb, true, 8, 4, 4)});
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
