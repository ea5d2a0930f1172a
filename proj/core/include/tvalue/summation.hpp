#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tvalue {

/// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Element-wise compensated accumulation of equally sized vectors.
class CompensatedVectorSum {
 public:
  explicit CompensatedVectorSum(std::size_t size) : sum_(size, 0.0), comp_(size, 0.0) {}

  void add(std::span<const double> x) noexcept {
    for (std::size_t i = 0; i < sum_.size(); ++i) {
      const double s = sum_[i];
      const double t = s + x[i];
      if ((s >= 0 ? s : -s) >= (x[i] >= 0 ? x[i] : -x[i])) {
        comp_[i] += (s - t) + x[i];
      } else {
        comp_[i] += (x[i] - t) + s;
      }
      sum_[i] = t;
    }
  }

  std::vector<double> value() const {
    std::vector<double> out(sum_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sum_[i] + comp_[i];
    return out;
  }

  std::size_t size() const noexcept { return sum_.size(); }

 private:
  std::vector<double> sum_;
  std::vector<double> comp_;
};

}  // namespace tvalue
