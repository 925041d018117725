#include <doctest.h>

#include "plethyst/error.hpp"
#include "plethyst/oracle.hpp"
#include "plethyst/plethysm.hpp"
#include "plethyst/tableau.hpp"
#include "plethyst/verify.hpp"

using namespace plethyst;
namespace orc = plethyst::oracle;

TEST_CASE("centralizer orders") {
  CHECK(orc::z({1, 1, 1}) == 6);
  CHECK(orc::z({3}) == 3);
  CHECK(orc::z({2, 1}) == 2);
  CHECK(orc::z({}) == 1);
  CHECK(orc::z({2, 2, 1}) == 8);
}

TEST_CASE("characters") {
  CHECK(orc::character({2, 1}, {1, 1, 1}) == 2);
  CHECK(orc::character({1, 1}, {2}) == -1);
  CHECK(orc::character({}, {}) == 1);
  CHECK_THROWS_AS(orc::character({2}, {1}), MismatchError);
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> ones(n, 1);
    for (const auto& rho : partitions_of(n)) CHECK(orc::character({n}, rho) == 1);
    // chi^lambda(1^n) counts standard tableaux.
    for (const auto& lambda : partitions_of(n))
      CHECK(orc::character(lambda, Partition(ones)) ==
            count_ssyt_weight(lambda, Weight(Partition(ones))));
  }
  // Sign character: (-1)^(n - l(rho)).
  for (const auto& rho : partitions_of(6))
    CHECK(orc::character({1, 1, 1, 1, 1, 1}, rho) == ((6 - rho.length()) % 2 ? -1 : 1));
}

TEST_CASE("character orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        Rational acc = 0;
        for (const auto& rho : ps)
          acc += Rational(orc::character(a, rho) * orc::character(b, rho), orc::z(rho));
        CHECK(acc == (a == b ? 1 : 0));
      }
  }
}

TEST_CASE("Schur to power sums") {
  auto p1 = orc::schur_to_p({1});
  CHECK(p1.terms().size() == 1);
  CHECK(p1.coefficient({1}) == 1);
  auto p2 = orc::schur_to_p({2});
  CHECK(p2.coefficient({1, 1}) == Rational(1, 2));
  CHECK(p2.coefficient({2}) == Rational(1, 2));
  auto p11 = orc::schur_to_p({1, 1});
  CHECK(p11.coefficient({1, 1}) == Rational(1, 2));
  CHECK(p11.coefficient({2}) == Rational(-1, 2));
  CHECK(p11.basis() == Basis::powersum);
  CHECK_THROWS_AS(orc::schur_to_p({5, 4}, 8), BoundError);

  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      auto p = orc::schur_to_p(lambda);
      auto s = SymFunc::basis_element(Basis::schur, lambda);
      CHECK(orc::p_to_schur(p) == s);
      CHECK(convert(orc::p_to_monomial(p), Basis::schur) == s);
    }
  CHECK_THROWS_AS(orc::p_to_schur(SymFunc::basis_element(Basis::schur, {1})), BasisError);
}

TEST_CASE("p_k plethysm composes on power sums") {
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      auto pl = SymFunc::basis_element(Basis::powersum, {l});
      CHECK(orc::pk_plethysm(k, pl) == SymFunc::basis_element(Basis::powersum, {k * l}));
    }
  auto p21 = SymFunc::basis_element(Basis::powersum, {2, 1});
  CHECK(orc::pk_plethysm(3, p21) == SymFunc::basis_element(Basis::powersum, {6, 3}));
  CHECK(orc::multiply(p21, p21) == SymFunc::basis_element(Basis::powersum, {2, 2, 1, 1}));
}

TEST_CASE("power-sum plethysm") {
  CHECK(orc::p_plethysm_schur({1}, {2, 1}) == SymFunc::basis_element(Basis::schur, {2, 1}));
  auto s22 = orc::p_plethysm_schur({2}, {2});
  CHECK(s22.coefficient({2, 2}) == 1);
  CHECK(s22 == add(SymFunc::basis_element(Basis::schur, {4}),
                   SymFunc::basis_element(Basis::schur, {2, 2})));
  for (const auto& [lambda, mu] : sweep_pairs(6)) {
    CHECK(orc::p_plethysm_schur(lambda, mu) == schur_expansion(lambda, mu));
    CHECK(orc::p_to_monomial(orc::p_plethysm(lambda, mu)) == monomial_expansion(lambda, mu));
  }
  CHECK_THROWS_AS(orc::p_plethysm_schur({3}, {3}, 8), BoundError);
}

TEST_CASE("finite-variable substitution") {
  auto f = orc::finite_variable_expansion({1, 1}, {2}, 2);
  CHECK(f.at({3, 1}) == 1);
  auto g = orc::finite_variable_expansion({1}, {2}, 2);
  CHECK(g == orc::Polynomial{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  auto h = orc::finite_variable_expansion({2}, {2}, 4);
  CHECK(h.at({2, 1, 1, 0}) == 2);
  // Symmetric: a permuted exponent has the same coefficient.
  CHECK(h.at({0, 1, 2, 1}) == 2);

  for (const auto& [lambda, mu] : sweep_pairs(4)) {
    const int mn = lambda.size() * mu.size();
    auto poly = orc::finite_variable_expansion(lambda, mu, mn);
    for (const auto& nu : partitions_of(mn)) {
      std::vector<int> exponent(mn, 0);
      for (int i = 0; i < nu.length(); ++i) exponent[i] = nu[i];
      auto it = poly.find(exponent);
      CHECK((it == poly.end() ? Integer(0) : it->second) == Integer(Y(lambda, mu, nu)));
    }
  }
}
