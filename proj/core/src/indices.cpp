#include "tvalue/indices.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "tvalue/error.hpp"

namespace tvalue {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_index: return "invalid index";
    case ErrorKind::divergent: return "divergent series";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole: return "pole";
    case ErrorKind::shape: return "shape mismatch";
    case ErrorKind::non_invertible: return "non-invertible series";
    case ErrorKind::out_of_range: return "out of range";
  }
  return "unknown error";
}

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::invalid_index, "index has no parts");
  if (std::any_of(parts_.begin(), parts_.end(), [](int k) { return k < 1; })) {
    throw Error(ErrorKind::invalid_index, "index parts must be positive: " + to_string());
  }
}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::invalid_index, "cannot parse index '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = end + 1;
  }
  return Index(std::move(parts));
}

int Index::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Index::height() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int k) { return k >= 2; }));
}

std::string Index::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Classification classify(const Index& ix) {
  return {ix.weight(), ix.depth(), ix.height(), ix.admissible()};
}

namespace {

// Appends, in descending lexicographic order, every completion of `prefix`
// by `slots` parts summing to `weight` with exactly `big` parts >= 2.
void extend(std::vector<int>& prefix, int weight, int slots, int big, std::vector<Index>& out) {
  if (slots == 0) {
    if (weight == 0 && big == 0) out.emplace_back(prefix);
    return;
  }
  // Remaining parts need at least one unit each, plus one more per big part.
  const int largest = weight - (slots - 1);
  for (int part = largest; part >= 1; --part) {
    const int big_left = big - (part >= 2 ? 1 : 0);
    const int rest = weight - part;
    if (big_left < 0 || big_left > slots - 1 || rest < (slots - 1) + big_left) continue;
    prefix.push_back(part);
    extend(prefix, rest, slots - 1, big_left, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Index> enumerate_admissible(int k, int n, int s) {
  std::vector<Index> out;
  if (!admissible_set_nonempty(k, n, s)) return out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  for (int first = k - (n - 1) - (s - 1); first >= 2; --first) {
    prefix.assign(1, first);
    extend(prefix, k - first, n - 1, s - 1, out);
  }
  return out;
}

std::vector<int> repeated(int part, int count) {
  return std::vector<int>(static_cast<std::size_t>(count), part);
}

}  // namespace tvalue
