#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tvalue/estimate.hpp"

namespace tvalue {

struct CaseResult {
  std::string label;
  Estimate lhs;
  Estimate rhs;
  double abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Outcome of checking one identity on a grid of cases. A case passes when
/// |lhs - rhs| <= max(tol, lhs.err_bound + rhs.err_bound).
struct VerificationReport {
  std::string suite;
  std::string identity;  // human-readable statement of what is compared
  std::vector<CaseResult> cases;
  bool overall_pass = true;

  const CaseResult& add(std::string label, const Estimate& lhs, const Estimate& rhs, double tol);
  void merge(const VerificationReport& other);

  int failures() const;
  double max_abs_diff() const;
};

/// One line per failing case (both sides, bounds and the identity), then a
/// summary line.
void print_summary(std::ostream& os, const VerificationReport& report);

/// Formats with 16 significant digits.
std::string format_number(double x);

}  // namespace tvalue
