#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tvalue {

/// A finite sequence (k1,...,kn) of positive integers.
class Index {
 public:
  /// Throws Error(invalid_index) when `parts` is empty or holds a part < 1.
  explicit Index(std::vector<int> parts);

  /// Parses "3,1,2" (whitespace around entries tolerated).
  static Index parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const noexcept { return parts_[i]; }

  int weight() const noexcept;
  int depth() const noexcept { return static_cast<int>(parts_.size()); }
  int height() const noexcept;
  bool admissible() const noexcept { return parts_.front() > 1; }

  std::string to_string() const;

  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

struct Classification {
  int weight = 0;
  int depth = 0;
  int height = 0;
  bool admissible = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Index& ix);

/// Elements of I0(k,n,s): admissible indices of weight k, depth n and height s,
/// in descending lexicographic order. Empty unless k >= n+s and n >= s >= 1.
std::vector<Index> enumerate_admissible(int k, int n, int s);

/// The cheap closed-form nonemptiness test for I0(k,n,s).
constexpr bool admissible_set_nonempty(int k, int n, int s) noexcept {
  return k >= n + s && n >= s && s >= 1;
}

/// Repeats `part` `count` times, e.g. repeated(2, 3) == {2,2,2}.
std::vector<int> repeated(int part, int count);

}  // namespace tvalue
