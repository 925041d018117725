#include <doctest.h>

#include <map>
#include <random>

#include "plethyst/error.hpp"
#include "plethyst/tableau.hpp"

using namespace plethyst;

namespace {
Tableau T(std::vector<std::vector<int>> rows) {
  std::vector<int> shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  return Tableau(Partition(std::move(shape)), std::move(rows));
}
}  // namespace

TEST_CASE("word, weight and text form") {
  auto t1 = T({{1, 1, 2}, {3}});
  auto t2 = T({{1, 1, 2}, {4}});
  auto t3 = T({{1, 2, 2}, {2}});
  CHECK(word(t1) == std::vector<int>{1, 1, 2, 3});
  CHECK(word(t3) == std::vector<int>{1, 2, 2, 2});
  CHECK(word(T({{5}})) == std::vector<int>{5});
  CHECK(weight(t1) == Weight({2, 1, 1}));
  CHECK(weight(T({{1, 1}, {2, 2}})) == Weight({2, 2}));
  CHECK(weight(t3) == Weight({1, 3}));
  CHECK(t1.to_string() == "112/3");
  CHECK(T({{1, 12}}).to_string() == "1{12}");

  CHECK(tableau_cmp(t1, t2) == std::strong_ordering::less);
  CHECK(tableau_cmp(t2, t3) == std::strong_ordering::less);
  CHECK(tableau_cmp(t1, t1) == std::strong_ordering::equal);
  CHECK_THROWS_AS(tableau_cmp(t1, T({{1, 1, 2, 3}})), MismatchError);
}

TEST_CASE("tableau invariants are enforced") {
  CHECK_THROWS_AS(T({{2, 1}}), ParseError);
  CHECK_THROWS_AS(T({{1, 2}, {1}}), ParseError);
  CHECK_THROWS_AS(Tableau(Partition{2}, {{1}}), ParseError);
  CHECK_THROWS_AS(T({{0}}), ParseError);
}

TEST_CASE("bounded enumeration") {
  auto ts = enumerate_ssyt_bounded({2}, 2);
  REQUIRE(ts.size() == 3);
  CHECK(ts[0] == T({{1, 1}}));
  CHECK(ts[1] == T({{1, 2}}));
  CHECK(ts[2] == T({{2, 2}}));
  CHECK(enumerate_ssyt_bounded({1, 1}, 1).empty());
  CHECK(enumerate_ssyt_bounded({}, 3).size() == 1);
  // Output is in increasing word order.
  auto big = enumerate_ssyt_bounded({3, 2}, 4);
  for (std::size_t i = 1; i < big.size(); ++i) CHECK(tableau_cmp(big[i - 1], big[i]) < 0);
}

TEST_CASE("weight enumeration and Kostka numbers") {
  CHECK(enumerate_ssyt_weight({2, 1}, Weight({1, 1, 1})).size() == 2);
  CHECK(enumerate_ssyt_weight({1, 1}, Weight({2})).empty());
  for (const auto& lambda : partitions_of(6)) {
    auto forced = enumerate_ssyt_weight(lambda, Weight(lambda));
    REQUIRE(forced.size() == 1);
    for (int r = 0; r < lambda.length(); ++r)
      for (int v : forced[0].rows()[r]) CHECK(v == r + 1);
  }
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({2, 2}, {3, 1}) == 0);
  CHECK_THROWS_AS(kostka({2}, {1}), MismatchError);
  CHECK_THROWS_AS(enumerate_ssyt_weight({2}, Weight({1})), MismatchError);
  // Weight counts need not be decreasing.
  CHECK(count_ssyt_weight({2, 1}, Weight({1, 2})) == 1);
  CHECK(count_ssyt_weight({2, 1}, Weight({0, 1, 2})) == 1);
}

TEST_CASE("bounded enumeration splits into weight fibers") {
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int m = 1; m <= 5; ++m) {
        std::map<std::vector<int>, std::uint64_t> fibers;
        auto all = enumerate_ssyt_bounded(lambda, m);
        for (const auto& t : all) {
          auto w = t.weight().counts;
          CHECK(static_cast<int>(w.size()) <= m);
          ++fibers[w];
        }
        std::uint64_t total = 0;
        for (const auto& [w, n] : fibers) {
          CHECK(count_ssyt_weight(lambda, Weight(w)) == n);
          total += n;
        }
        CHECK(total == all.size());
      }
}

TEST_CASE("budgeted enumeration") {
  CHECK(enumerate_ssyt_within({2, 1}, {1, 1, 1}) ==
        std::vector<Tableau>{T({{1, 2}, {3}}), T({{1, 3}, {2}})});
  CHECK(enumerate_ssyt_within({2, 1}, {2, 1}) == std::vector<Tableau>{T({{1, 1}, {2}})});
  CHECK(enumerate_ssyt_within({3}, {1, 1}).empty());

  for (const auto& lambda : partitions_of(4))
    for (const auto& budget : {Weight{2, 2, 1}, Weight{1, 1, 1, 1, 1}, Weight{3, 1, 2}}) {
      std::vector<Tableau> expected;
      for (auto& t : enumerate_ssyt_bounded(lambda, static_cast<int>(budget.counts.size()))) {
        auto w = t.weight();
        bool fits = true;
        for (std::size_t k = 0; k < w.counts.size(); ++k) fits = fits && w[k] <= budget[k];
        if (fits) expected.push_back(t);
      }
      CHECK(enumerate_ssyt_within(lambda, budget) == expected);
    }
}

TEST_CASE("sum of x^T over bounded tableaux matches the Kostka m-expansion") {
  // Coefficient of each partition exponent in s_lambda(x_1..x_m) is K.
  for (int size = 1; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int m = 1; m <= 5; ++m) {
        std::map<std::vector<int>, std::uint64_t> poly;
        for (const auto& t : enumerate_ssyt_bounded(lambda, m)) ++poly[t.weight().counts];
        for (const auto& mu : partitions_of(size)) {
          std::vector<int> key(mu.parts().begin(), mu.parts().end());
          auto expected = mu.length() <= m ? kostka(lambda, mu) : 0;
          auto it = poly.find(key);
          CHECK((it == poly.end() ? 0 : it->second) == expected);
        }
      }
}

TEST_CASE("tableau_cmp is a total order (random triples)") {
  auto pool = enumerate_ssyt_bounded({3, 2, 1}, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const auto& c = pool[pick(rng)];
    auto ab = tableau_cmp(a, b);
    CHECK((tableau_cmp(b, a) == (0 <=> ab)));
    CHECK((ab == 0) == (a == b));
    if (ab <= 0 && tableau_cmp(b, c) <= 0) CHECK(tableau_cmp(a, c) <= 0);
  }
}
