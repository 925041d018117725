#include "plethyst/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "plethyst/error.hpp"

namespace plethyst {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw ParseError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ParseError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition{};

  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed partition part '" + std::string(token) + "'");
    if (value <= 0)
      throw ParseError("partition parts must be positive");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::strong_ordering revlex_cmp(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw MismatchError("revlex_cmp: partitions of " + std::to_string(a.size()) +
                        " and " + std::to_string(b.size()));
  auto n = static_cast<std::size_t>(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto pa = a.parts(), pb = b.parts();
  // Same size means neither can be a proper prefix of the other.
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

std::vector<Partition> partitions_of(int n, int max_n) {
  if (n < 0) throw ParseError("partitions_of: negative size");
  if (n > max_n)
    throw BoundError("partitions_of: n = " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_n));
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest part first at every position yields revlex-decreasing order.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace plethyst
