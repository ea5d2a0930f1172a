#pragma once

#include <span>
#include <vector>

namespace tvalue {

/// Shape of the truncation error of a slowly convergent positive series:
///
///   S(N) = S_inf + sum_{i<=inverse_powers} sum_{j<=log_degree}
///                    beta_ij * N^-(decay + i) * (log N)^j
///
/// The nested sums over odd integers use decay = 1 with log terms; the pFq
/// series at unit argument use decay = sum(b) - sum(a) with pure 1/N powers.
struct TailModel {
  double decay = 1.0;
  int log_degree = 0;
  int inverse_powers = 0;

  int unknowns() const noexcept { return 1 + (log_degree + 1) * (inverse_powers + 1); }
};

struct Checkpoint {
  double n = 0.0;            // truncation point N
  double partial_sum = 0.0;  // S(N)
};

struct Extrapolated {
  double value = 0.0;
  double err_bound = 0.0;
};

/// Truncation points last, last/2, last/4, ... (count of them), each forced
/// odd when `odd` is set. Throws Error(domain) if they would not be distinct.
std::vector<long long> geometric_checkpoints(long long last, int count, bool odd);

/// Linear tail fit shared by many series that use the same checkpoints.
///
/// The limit is solved from the leading `model.unknowns()` checkpoints; a
/// second solve on the window shifted one checkpoint down gives the error
/// estimate, err = safety * |primary - shifted| plus a rounding floor.
/// Requires `ns.size() >= model.unknowns() + 1`, ordered largest first.
class TailFit {
 public:
  static constexpr double kSafety = 10.0;

  TailFit(std::span<const double> ns, TailModel model);

  /// `partials[i]` is the partial sum at ns[i].
  Extrapolated apply(std::span<const double> partials) const;

  const TailModel& model() const noexcept { return model_; }
  std::size_t checkpoints() const noexcept { return ns_.size(); }

 private:
  std::vector<double> limit_weights(std::size_t offset) const;

  std::vector<double> ns_;
  TailModel model_;
  std::vector<double> primary_;
  std::vector<double> shifted_;
};

/// One-shot convenience wrapper around TailFit.
Extrapolated extrapolate_limit(std::span<const Checkpoint> checkpoints, TailModel model);

}  // namespace tvalue
