#include "tvalue/oracle.hpp"

#include <algorithm>
#include <string>

#include "tvalue/error.hpp"
#include "tvalue/extrapolation.hpp"
#include "tvalue/parallel.hpp"
#include "tvalue/summation.hpp"

namespace tvalue {

namespace oracle {

Sweep partial_sums(const Index& ix, std::vector<long long> cutoffs, bool star) {
  std::sort(cutoffs.begin(), cutoffs.end());
  Sweep sweep{cutoffs, std::vector<double>(cutoffs.size(), 0.0)};
  if (cutoffs.empty()) return sweep;

  const auto parts = ix.parts();
  const std::size_t depth = parts.size();
  const int max_part = *std::max_element(parts.begin(), parts.end());
  std::vector<double> inv_pow(static_cast<std::size_t>(max_part + 1), 1.0);
  // level[j] accumulates the nested sum of the suffix (k_j, ..., k_n).
  std::vector<CompensatedSum> level(depth);

  std::size_t next = 0;
  const long long last = cutoffs.back();
  for (long long m = 1; m <= last; m += 2) {
    const double inv = 1.0 / static_cast<double>(m);
    for (std::size_t e = 1; e < inv_pow.size(); ++e) inv_pow[e] = inv_pow[e - 1] * inv;
    if (star) {
      // m_j >= m_{j+1}: inner levels already include m.
      for (std::size_t j = depth; j-- > 0;) {
        const double inner = j + 1 < depth ? level[j + 1].value() : 1.0;
        level[j].add(inv_pow[static_cast<std::size_t>(parts[j])] * inner);
      }
    } else {
      // m_j > m_{j+1}: inner levels must not include m yet.
      for (std::size_t j = 0; j < depth; ++j) {
        const double inner = j + 1 < depth ? level[j + 1].value() : 1.0;
        level[j].add(inv_pow[static_cast<std::size_t>(parts[j])] * inner);
      }
    }
    while (next < cutoffs.size() && cutoffs[next] <= m + 1) {
      if (cutoffs[next] >= m) sweep.partial_sums[next] = level[0].value();
      ++next;
    }
  }
  return sweep;
}

namespace {

Estimate evaluate(const Index& ix, long long cutoff, bool star) {
  if (!ix.admissible()) {
    throw Error(ErrorKind::divergent, "non-admissible index " + ix.to_string() +
                                          ": the leading part must exceed 1");
  }
  if (cutoff < 2LL * ix.depth()) {
    throw Error(ErrorKind::domain, "cutoff " + std::to_string(cutoff) + " below 2 * depth");
  }
  // Truncation error ~ M^-1 P(log M), deg P <= depth - 1.
  const TailModel model{1.0, ix.depth() - 1, 0};
  const long long last_odd = cutoff % 2 ? cutoff : cutoff - 1;
  const auto points = geometric_checkpoints(last_odd, model.unknowns() + 1, true);
  const Sweep sweep = partial_sums(ix, points, star);

  // TailFit expects the largest checkpoint first.
  std::vector<double> ns(sweep.cutoffs.rbegin(), sweep.cutoffs.rend());
  std::vector<double> sums(sweep.partial_sums.rbegin(), sweep.partial_sums.rend());
  const Extrapolated limit = TailFit(ns, model).apply(sums);
  return {limit.value, limit.err_bound, last_odd, model.log_degree};
}

}  // namespace

Estimate eval_t(const Index& ix, long long cutoff) { return evaluate(ix, cutoff, false); }

Estimate eval_t_star(const Index& ix, long long cutoff) { return evaluate(ix, cutoff, true); }

SumTable sum_table(int k_max, bool star, long long cutoff, unsigned threads) {
  if (k_max < 2) throw Error(ErrorKind::domain, "sum_table needs k_max >= 2");
  struct Job {
    WeightDepthHeight key;
    Index ix;
  };
  std::vector<Job> jobs;
  for (int k = 2; k <= k_max; ++k)
    for (int n = 1; n < k; ++n)
      for (int s = 1; s <= n; ++s)
        for (auto& ix : enumerate_admissible(k, n, s)) jobs.push_back({{k, n, s}, std::move(ix)});

  std::vector<Estimate> results(jobs.size());
  parallel_for(jobs.size(), threads,
               [&](std::size_t i) { results[i] = eval(jobs[i].ix, star, cutoff); });

  SumTable table(star);
  std::map<WeightDepthHeight, Estimate> cells;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [it, fresh] = cells.try_emplace(jobs[i].key, results[i]);
    if (!fresh) it->second = it->second + results[i];
  }
  for (const auto& [key, e] : cells) table.insert(key, e);
  return table;
}

}  // namespace oracle

const Estimate& SumTable::at(int k, int n, int s) const {
  if (!admissible_set_nonempty(k, n, s)) {
    throw Error(ErrorKind::invalid_index, "I0(" + std::to_string(k) + "," + std::to_string(n) +
                                              "," + std::to_string(s) + ") is empty");
  }
  auto it = entries_.find({k, n, s});
  if (it == entries_.end()) {
    throw Error(ErrorKind::out_of_range, "weight " + std::to_string(k) + " not tabulated");
  }
  return it->second;
}

bool SumTable::contains(int k, int n, int s) const { return entries_.contains({k, n, s}); }

Estimate SumTable::weight_depth(int k, int n) const {
  Estimate total = Estimate::exact(0.0);
  bool any = false;
  for (int s = 1; s <= n; ++s) {
    if (!admissible_set_nonempty(k, n, s)) continue;
    const Estimate& e = at(k, n, s);
    total = any ? total + e : e;
    any = true;
  }
  return total;
}

void SumTable::insert(WeightDepthHeight key, Estimate e) {
  if (!admissible_set_nonempty(key.k, key.n, key.s)) {
    throw Error(ErrorKind::invalid_index, "SumTable keys need k >= n+s and n >= s >= 1");
  }
  entries_[key] = e;
}

int SumTable::k_max() const noexcept { return entries_.empty() ? 0 : entries_.rbegin()->first.k; }

}  // namespace tvalue
