#pragma once

#include <map>
#include <vector>

#include "plethyst/numeric.hpp"
#include "plethyst/partition.hpp"
#include "plethyst/symfunc.hpp"

// Independent plethysm computations used to cross-check the tableau engine.
// Nothing here touches composite tableaux, Y counts or the Kostka matrices.
namespace plethyst::oracle {

inline constexpr int kDefaultMaxDegree = 16;

/// A SymFunc under the power-sum tag: coefficients indexed by cycle types.
using PowerSumExpansion = SymFunc;

/// Centralizer order: prod over part sizes i with multiplicity k of i^k k!.
Integer z(const Partition& rho);

/// Symmetric-group character chi^lambda at cycle type rho, by
/// Murnaghan-Nakayama border-strip removal (memoized).
Integer character(const Partition& lambda, const Partition& rho);

/// s_lambda = sum_rho chi^lambda(rho) / z_rho p_rho.
PowerSumExpansion schur_to_p(const Partition& lambda, int max_degree = kDefaultMaxDegree);

/// p_rho = sum_lambda chi^lambda(rho) s_lambda, extended linearly.
SymFunc p_to_schur(const PowerSumExpansion& f);

/// p_rho = sum_lambda R[rho][lambda] m_lambda, where R counts the ways to
/// distribute the parts of rho into rows summing to lambda.
SymFunc p_to_monomial(const PowerSumExpansion& f);

/// Product of two power-sum expansions (p_a p_b = p_{a union b}).
PowerSumExpansion multiply(const PowerSumExpansion& f, const PowerSumExpansion& g);

/// p_k[f]: every p_rho in f becomes p_{k rho}.
PowerSumExpansion pk_plethysm(int k, const PowerSumExpansion& f);

/// s_lambda[s_mu] in the power-sum basis.
PowerSumExpansion p_plethysm(const Partition& lambda, const Partition& mu,
                             int max_degree = kDefaultMaxDegree);

/// s_lambda[s_mu] in the Schur basis through the power-sum route. Throws
/// InvariantError if the rationals fail to cancel to integers.
SymFunc p_plethysm_schur(const Partition& lambda, const Partition& mu,
                         int max_degree = kDefaultMaxDegree);

/// Exponent vectors of length s mapped to coefficients.
using Polynomial = std::map<std::vector<int>, Integer>;

/// s_lambda[s_mu](x_1, ..., x_s, 0, ...) by direct substitution: the
/// monomials of s_mu in s variables become the variables of s_lambda.
Polynomial finite_variable_expansion(const Partition& lambda, const Partition& mu, int s);

}  // namespace plethyst::oracle
