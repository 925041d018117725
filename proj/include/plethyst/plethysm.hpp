#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plethyst/partition.hpp"
#include "plethyst/symfunc.hpp"
#include "plethyst/tableau.hpp"

namespace plethyst {

inline constexpr int kDefaultMaxDegree = 16;
inline constexpr int kSoftMaxDegree = 12;
inline constexpr int kDefaultMaxPermutationLength = 7;

/// A semistandard tableau of composite shape lambda[mu]: one semistandard
/// tableau of shape mu in every cell of lambda, the arrangement itself
/// semistandard under tableau_cmp (weakly increasing along rows of lambda,
/// strictly increasing down its columns).
class PlethTableau {
 public:
  // Cells of lambda in row-major order. Throws ParseError if any invariant fails.
  PlethTableau(Partition outer, Partition inner, std::vector<Tableau> cells);

  const Partition& outer_shape() const { return outer_; }
  const Partition& inner_shape() const { return inner_; }
  const Tableau& cell(int row, int col) const;
  const std::vector<Tableau>& cells() const { return cells_; }

  // Entry multiplicities over all inner tableaux.
  Weight weight() const;

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Tableau> cells_;
};

/// All composite tableaux of shape lambda[mu] with total weight nu, in a
/// fixed order. Throws MismatchError unless |nu| = |lambda|·|mu|.
std::vector<PlethTableau> enumerate_pleth_weight(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu);

/// Number of composite tableaux of shape lambda[mu] and weight nu; the
/// m_nu coefficient of s_lambda[s_mu].
std::uint64_t Y(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of composite tableaux of shape lambda[mu] with every entry at most
/// max_entry, whatever their weight.
std::uint64_t count_pleth_bounded(const Partition& lambda, const Partition& mu, int max_entry);

/// s_lambda[s_mu] over the monomial basis, one Y count per nu |- mn.
/// Throws BoundError when mn exceeds max_degree.
SymFunc monomial_expansion(const Partition& lambda, const Partition& mu,
                           int max_degree = kDefaultMaxDegree);

/// sum_kappa Kinv[kappa][nu] c_kappa for a monomial-basis input, with no
/// sign check on the result.
SymFunc inverse_kostka_transform(const SymFunc& monomial);

/// s_lambda[s_mu] over the Schur basis: a^nu = sum_kappa Kinv[kappa][nu] Y^kappa.
/// Negative or fractional output throws InvariantError.
SymFunc schur_expansion(const Partition& lambda, const Partition& mu,
                        int max_degree = kDefaultMaxDegree);
SymFunc schur_expansion(const SymFunc& monomial);

/// (nu_{pi(i)} - pi(i) + i) for i = 1..l, with pi given as its one-line
/// notation on [1, l] and nu zero-padded to length l.
std::vector<int> pi_star(std::span<const int> pi, const Partition& nu);

/// a^nu as the signed sum over pi in S_l, l = l(nu), of Y at the sorted
/// positive part of pi*nu. Terms with a negative entry vanish.
/// Throws BoundError when l(nu) exceeds max_length.
Integer coeff_via_jacobi_trudi(const Partition& lambda, const Partition& mu, const Partition& nu,
                               int max_length = kDefaultMaxPermutationLength);
// Same sum, reading Y from an already computed monomial expansion.
Integer coeff_via_jacobi_trudi(const SymFunc& monomial, const Partition& nu,
                               int max_length = kDefaultMaxPermutationLength);

/// nu_0 = (m mu_1, ..., m mu_{l'-1}, m(mu_{l'} - 1) + lambda_1, lambda_2, ..., lambda_l).
Partition first_term(const Partition& lambda, const Partition& mu);

/// The `count` largest tableaux of shape mu under the monomial order on
/// x^T: the superstandard T_1, then T_k with the last cell of row l'
/// raised to l' + k - 1.
std::vector<Tableau> leading_tableaux(const Partition& mu, int count);

}  // namespace plethyst
