#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "plethyst/partition.hpp"

namespace plethyst {

/// Entry multiplicities of a tableau: counts[k-1] is the number of entries
/// equal to k. Trailing zeros are trimmed.
struct Weight {
  std::vector<int> counts;

  Weight() = default;
  Weight(std::initializer_list<int> c) : Weight(std::vector<int>(c)) {}
  explicit Weight(std::vector<int> c);
  // A partition read as a weight vector.
  explicit Weight(const Partition& p);

  int total() const;
  int operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// A semistandard Young tableau with positive integer entries.
///
/// Rows weakly increase left to right, columns strictly increase top to
/// bottom. The constructor enforces this.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int row, int col) const { return rows_[row][col]; }
  int cells() const { return shape_.size(); }

  // Row-major, top row first.
  std::vector<int> word() const;
  Weight weight() const;

  // Rows joined by '/': "112/3". Entries above 9 are written in braces.
  std::string to_string() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Lexicographic comparison of reading words. Throws MismatchError when the
/// shapes differ.
std::strong_ordering tableau_cmp(const Tableau& t, const Tableau& u);

std::vector<int> word(const Tableau& t);
Weight weight(const Tableau& t);

/// Every semistandard tableau of the shape with entries in [1, max_entry],
/// in increasing word order.
std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_entry);

/// Every semistandard tableau of the shape with exactly the given weight,
/// in increasing word order. Throws MismatchError when the weight total
/// differs from the shape size.
std::vector<Tableau> enumerate_ssyt_weight(const Partition& shape, const Weight& w);

/// Every semistandard tableau of the shape in which each entry k appears at
/// most budget[k-1] times, in increasing word order.
std::vector<Tableau> enumerate_ssyt_within(const Partition& shape, const Weight& budget);

/// Number of tableaux enumerate_ssyt_weight would return, without building them.
std::uint64_t count_ssyt_weight(const Partition& shape, const Weight& w);

/// Kostka number: semistandard tableaux of shape lambda and weight mu.
std::uint64_t kostka(const Partition& lambda, const Partition& mu);

}  // namespace plethyst
