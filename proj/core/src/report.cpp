#include "tvalue/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace tvalue {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", x);
  return buf;
}

const CaseResult& VerificationReport::add(std::string label, const Estimate& lhs,
                                          const Estimate& rhs, double tol) {
  CaseResult c;
  c.label = std::move(label);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_diff = std::abs(lhs.value - rhs.value);
  c.tol = tol;
  c.pass = c.abs_diff <= std::max(tol, lhs.err_bound + rhs.err_bound);
  overall_pass = overall_pass && c.pass;
  cases.push_back(std::move(c));
  return cases.back();
}

void VerificationReport::merge(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  overall_pass = overall_pass && other.overall_pass;
}

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

double VerificationReport::max_abs_diff() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.abs_diff);
  return m;
}

void print_summary(std::ostream& os, const VerificationReport& report) {
  for (const auto& c : report.cases) {
    if (c.pass) continue;
    os << "  FAIL " << report.suite << " [" << report.identity << "] " << c.label
       << ": lhs=" << format_number(c.lhs.value) << " (+-" << format_number(c.lhs.err_bound)
       << ") rhs=" << format_number(c.rhs.value) << " (+-" << format_number(c.rhs.err_bound)
       << ") |diff|=" << format_number(c.abs_diff) << " tol=" << format_number(c.tol) << '\n';
  }
  os << report.suite << ": " << (report.overall_pass ? "PASS" : "FAIL") << " ("
     << report.cases.size() - static_cast<std::size_t>(report.failures()) << "/" << report.cases.size()
     << " cases, max |diff| " << format_number(report.max_abs_diff()) << ")\n";
}

}  // namespace tvalue
