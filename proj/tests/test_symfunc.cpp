#include <doctest.h>

#include <random>

#include "plethyst/error.hpp"
#include "plethyst/serialize.hpp"
#include "plethyst/symfunc.hpp"

using namespace plethyst;

namespace {
SymFunc single(Basis b, Partition p) { return SymFunc::basis_element(b, p); }
}  // namespace

TEST_CASE("coefficient-wise linear algebra") {
  auto f = add(single(Basis::schur, {4}), single(Basis::schur, {2, 2}));
  CHECK(coefficient(f, {2, 2}) == 1);
  CHECK(scale(0, f).is_zero());
  CHECK(coefficient(single(Basis::monomial, {2, 1}), {3}) == 0);
  CHECK(add(f, scale(-1, f)).is_zero());
  CHECK(add(f, scale(-1, f)).terms().empty());
  CHECK_THROWS_AS(add(f, single(Basis::monomial, {4})), MismatchError);
  CHECK_THROWS_AS(add(f, single(Basis::schur, {3})), MismatchError);
  SymFunc g(Basis::schur, 3);
  CHECK_THROWS_AS(g.add_term({2, 2}, 1), MismatchError);
}

TEST_CASE("Kostka matrix examples") {
  auto k3 = kostka_matrix(3);
  std::vector<std::vector<Integer>> expected{{1, 1, 1}, {0, 1, 2}, {0, 0, 1}};
  CHECK(k3->K == expected);

  auto k4 = kostka_matrix(4);
  CHECK(k4->kinv({2, 2}, {2, 2}) == 1);
  CHECK(k4->kinv({3, 1}, {2, 2}) == -1);
  CHECK(k4->kinv({4}, {2, 2}) == 0);
  // Full inverse from sympy's exact matrix inverse.
  std::vector<std::vector<Integer>> kinv4{{1, -1, 0, 1, -1},
                                          {0, 1, -1, -1, 2},
                                          {0, 0, 1, -1, 1},
                                          {0, 0, 0, 1, -3},
                                          {0, 0, 0, 0, 1}};
  CHECK(k4->Kinv == kinv4);
  CHECK(kostka_matrix(4) == k4);  // cached
  CHECK_THROWS_AS(kostka_matrix(9, 8), BoundError);
  CHECK_THROWS_AS(k4->position({3}), MismatchError);
}

TEST_CASE("Kostka matrices are mutually inverse and revlex-unitriangular") {
  for (int n = 0; n <= 8; ++n) {
    auto km = kostka_matrix(n);
    const auto p = km->index.size();
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        Integer left = 0, right = 0;
        for (std::size_t t = 0; t < p; ++t) {
          left += km->K[i][t] * km->Kinv[t][j];
          right += km->Kinv[i][t] * km->K[t][j];
        }
        CHECK(left == (i == j ? 1 : 0));
        CHECK(right == (i == j ? 1 : 0));
        if (revlex_cmp(km->index[i], km->index[j]) < 0) {
          CHECK(km->K[i][j] == 0);
          CHECK(km->Kinv[i][j] == 0);
        }
      }
  }
}

TEST_CASE("basis conversion") {
  auto s2 = convert(single(Basis::schur, {2}), Basis::monomial);
  CHECK(s2 == add(single(Basis::monomial, {2}), single(Basis::monomial, {1, 1})));
  auto m31 = convert(single(Basis::monomial, {3, 1}), Basis::schur);
  CHECK(m31.coefficient({2, 2}) == -1);
  auto s21 = single(Basis::schur, {2, 1});
  CHECK(convert(s21, Basis::schur) == s21);
  CHECK_THROWS_AS(convert(s21, Basis::powersum), BasisError);
  CHECK_THROWS_AS(convert(single(Basis::powersum, {2}), Basis::schur), BasisError);
  // h_2 = s_2 and h_11 = s_2 + s_11.
  CHECK(convert(single(Basis::homogeneous, {1, 1}), Basis::schur) ==
        add(single(Basis::schur, {2}), single(Basis::schur, {1, 1})));
}

TEST_CASE("round-trip conversions are exact for single basis elements") {
  const Basis bases[] = {Basis::monomial, Basis::schur, Basis::homogeneous};
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n))
      for (Basis from : bases)
        for (Basis to : bases) {
          auto f = single(from, lambda);
          auto there = convert(f, to);
          for (const auto& [mu, c] : there.terms()) CHECK(is_integral(c));
          CHECK(convert(there, from) == f);
        }
}

TEST_CASE("Hall inner product") {
  CHECK(hall_inner(single(Basis::schur, {2, 1}), single(Basis::schur, {2, 1})) == 1);
  CHECK(hall_inner(single(Basis::schur, {3}), single(Basis::schur, {2, 1})) == 0);
  CHECK_THROWS_AS(hall_inner(single(Basis::schur, {3}), single(Basis::schur, {2})),
                  MismatchError);
  // m and h are dual: <m_lambda, h_mu> = delta.
  for (const auto& a : partitions_of(5))
    for (const auto& b : partitions_of(5))
      CHECK(hall_inner(single(Basis::monomial, a), single(Basis::homogeneous, b)) ==
            (a == b ? 1 : 0));
  // <f, h_kappa> is the m_kappa coefficient of f, here f = s_2[s_2] = s_4 + s_22.
  auto f = add(single(Basis::schur, {4}), single(Basis::schur, {2, 2}));
  auto fm = convert(f, Basis::monomial);
  for (const auto& kappa : partitions_of(4))
    CHECK(hall_inner(f, single(Basis::homogeneous, kappa)) == fm.coefficient(kappa));
}

TEST_CASE("Hall inner product is symmetric and bilinear (random functions)") {
  std::mt19937 rng(42);
  const Basis bases[] = {Basis::monomial, Basis::schur, Basis::homogeneous};
  auto random_f = [&](int n) {
    SymFunc f(bases[rng() % 3], n);
    for (const auto& p : partitions_of(n))
      if (rng() % 2) f.add_term(p, static_cast<int>(rng() % 11) - 5);
    return convert(f, Basis::schur);
  };
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 6;
    auto f = random_f(n), g = random_f(n), h = random_f(n);
    Rational c = static_cast<int>(rng() % 7) - 3;
    CHECK(hall_inner(f, g) == hall_inner(g, f));
    CHECK(hall_inner(add(f, scale(c, g)), h) == hall_inner(f, h) + c * hall_inner(g, h));
  }
}

TEST_CASE("render and JSON") {
  auto f = add(single(Basis::schur, {4}), single(Basis::schur, {2, 2}));
  CHECK(render(f) == "s[4] + s[2,2]");
  auto g = add(scale(2, single(Basis::monomial, {2, 1, 1})), scale(-1, single(Basis::monomial, {4})));
  CHECK(render(g) == "-m[4] + 2·m[2,1,1]");
  CHECK(render(SymFunc(Basis::schur, 2)) == "0");
  CHECK(to_json(f).dump() ==
        R"({"basis":"s","degree":4,"terms":[{"partition":[4],"coeff":"1"},{"partition":[2,2],"coeff":"1"}]})");
  CHECK(symfunc_from_json(to_json(f)) == f);
  auto p = scale(Rational(1, 2), single(Basis::powersum, {2}));
  CHECK(to_json(p)["terms"][0]["coeff"] == "1/2");
  CHECK(symfunc_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"q","degree":1,"terms":[]})")),
                  ParseError);
  CHECK(to_json(Partition{}).dump() == "[]");
}
