#pragma once

namespace tvalue {

/// A truncated infinite sum: the extrapolated limit together with a bound on
/// the combined truncation and extrapolation error.
struct Estimate {
  double value = 0.0;
  double err_bound = 0.0;
  long long cutoff = 0;   // last term index (or largest odd m) summed
  int extrap_order = 0;   // number of correction terms in the tail model

  static Estimate exact(double v) { return {v, 0.0, 0, 0}; }
};

inline Estimate operator+(const Estimate& a, const Estimate& b) {
  return {a.value + b.value, a.err_bound + b.err_bound,
          a.cutoff < b.cutoff ? a.cutoff : b.cutoff,
          a.extrap_order > b.extrap_order ? a.extrap_order : b.extrap_order};
}

inline Estimate operator*(double s, const Estimate& a) {
  return {s * a.value, (s < 0 ? -s : s) * a.err_bound, a.cutoff, a.extrap_order};
}

}  // namespace tvalue
