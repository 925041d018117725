#include "plethyst/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "plethyst/error.hpp"

namespace plethyst {

Weight::Weight(std::vector<int> c) : counts(std::move(c)) {
  for (int k : counts)
    if (k < 0) throw ParseError("weight counts must be non-negative");
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

Weight::Weight(const Partition& p) : counts(p.parts().begin(), p.parts().end()) {}

int Weight::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw ParseError("tableau row count does not match its shape");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (static_cast<int>(row.size()) != shape_[r])
      throw ParseError("tableau row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw ParseError("tableau entries must be positive");
      if (c > 0 && row[c] < row[c - 1])
        throw ParseError("tableau rows must weakly increase");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        throw ParseError("tableau columns must strictly increase");
    }
  }
}

std::vector<int> Tableau::word() const {
  std::vector<int> w;
  w.reserve(shape_.size());
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

Weight Tableau::weight() const {
  std::vector<int> counts;
  for (const auto& row : rows_)
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
      ++counts[v - 1];
    }
  return Weight(std::move(counts));
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (int v : rows_[r])
      out += v < 10 ? std::to_string(v) : "{" + std::to_string(v) + "}";
  }
  return out;
}

std::strong_ordering tableau_cmp(const Tableau& t, const Tableau& u) {
  if (!(t.shape() == u.shape()))
    throw MismatchError("tableau_cmp: shapes " + t.shape().to_string() + " and " +
                        u.shape().to_string());
  auto a = t.word(), b = u.word();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> word(const Tableau& t) { return t.word(); }
Weight weight(const Tableau& t) { return t.weight(); }

namespace {

// Row-major depth-first filler. Values are tried in increasing order so
// complete fillings come out in increasing word order. `remaining` is
// either empty (no weight constraint) or holds per-value budgets.
template <typename Visit>
class SsytFiller {
 public:
  SsytFiller(const Partition& shape, int max_entry, std::vector<int> remaining, Visit visit)
      : shape_(shape), max_entry_(max_entry), remaining_(std::move(remaining)),
        weighted_(!remaining_.empty()), visit_(visit) {
    rows_.resize(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows_[r].assign(shape[r], 0);
    column_height_.assign(shape[0], 0);
    for (int r = 0; r < shape.length(); ++r)
      for (int c = 0; c < shape[r]; ++c) ++column_height_[c];
  }

  void run() { fill(0, 0); }

 private:
  void fill(int r, int c) {
    if (r == shape_.length()) {
      visit_(rows_);
      return;
    }
    if (c == shape_[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows_[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows_[r - 1][c] + 1);
    // Leave room for the strictly larger entries still needed below.
    int hi = max_entry_ - (column_height_[c] - r - 1);
    for (int v = lo; v <= hi; ++v) {
      if (weighted_) {
        if (remaining_[v - 1] == 0) continue;
        --remaining_[v - 1];
      }
      rows_[r][c] = v;
      fill(r, c + 1);
      if (weighted_) ++remaining_[v - 1];
    }
  }

  const Partition& shape_;
  int max_entry_;
  std::vector<int> remaining_;
  bool weighted_;
  Visit visit_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> column_height_;
};

template <typename Visit>
void fill_ssyt(const Partition& shape, int max_entry, std::vector<int> remaining, Visit visit) {
  if (shape.empty()) {
    visit(std::vector<std::vector<int>>{});
    return;
  }
  if (max_entry < shape.length()) return;
  SsytFiller<Visit&> filler(shape, max_entry, std::move(remaining), visit);
  filler.run();
}

void check_weight_total(const Partition& shape, const Weight& w) {
  if (w.total() != shape.size())
    throw MismatchError("weight total " + std::to_string(w.total()) +
                        " differs from shape size " + std::to_string(shape.size()));
}

}  // namespace

std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  if (max_entry < 0) return out;
  fill_ssyt(shape, max_entry, {}, [&](const std::vector<std::vector<int>>& rows) {
    out.emplace_back(shape, rows);
  });
  return out;
}

std::vector<Tableau> enumerate_ssyt_weight(const Partition& shape, const Weight& w) {
  check_weight_total(shape, w);
  std::vector<Tableau> out;
  auto max_entry = static_cast<int>(w.counts.size());
  fill_ssyt(shape, max_entry, w.counts, [&](const std::vector<std::vector<int>>& rows) {
    out.emplace_back(shape, rows);
  });
  return out;
}

std::vector<Tableau> enumerate_ssyt_within(const Partition& shape, const Weight& budget) {
  std::vector<Tableau> out;
  auto max_entry = static_cast<int>(budget.counts.size());
  if (max_entry == 0) {
    if (shape.empty()) out.emplace_back(shape, std::vector<std::vector<int>>{});
    return out;
  }
  fill_ssyt(shape, max_entry, budget.counts, [&](const std::vector<std::vector<int>>& rows) {
    out.emplace_back(shape, rows);
  });
  return out;
}

std::uint64_t count_ssyt_weight(const Partition& shape, const Weight& w) {
  check_weight_total(shape, w);
  std::uint64_t n = 0;
  auto max_entry = static_cast<int>(w.counts.size());
  fill_ssyt(shape, max_entry, w.counts, [&](const std::vector<std::vector<int>>&) { ++n; });
  return n;
}

std::uint64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw MismatchError("kostka: partitions of " + std::to_string(lambda.size()) + " and " +
                        std::to_string(mu.size()));
  return count_ssyt_weight(lambda, Weight(mu));
}

}  // namespace plethyst
