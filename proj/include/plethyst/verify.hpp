#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plethyst/numeric.hpp"
#include "plethyst/partition.hpp"
#include "plethyst/plethysm.hpp"
#include "plethyst/symfunc.hpp"

namespace plethyst {

// Names of the checks an ExpansionReport may carry, in report order.
namespace check {
inline constexpr const char* first_term_match = "first_term_match";
inline constexpr const char* first_term_coefficient_one = "first_term_coefficient_one";
inline constexpr const char* y_first_term_one = "y_first_term_one";
inline constexpr const char* y_vanishes_above_first_term = "y_vanishes_above_first_term";
inline constexpr const char* y_dominates_a = "y_dominates_a";
inline constexpr const char* a_nonnegative = "a_nonnegative";
inline constexpr const char* oracle_agreement = "oracle_agreement";
}  // namespace check

/// Everything one verification run of s_lambda[s_mu] produced.
struct ExpansionReport {
  Partition lambda;
  Partition mu;
  SymFunc monomial_coeffs{Basis::monomial, 0};
  SymFunc schur_coeffs{Basis::schur, 0};
  Partition predicted_first_term;
  // Revlex-largest nu with a nonzero Schur coefficient.
  Partition observed_first_term;
  Integer first_term_coefficient;
  std::vector<std::pair<std::string, bool>> checks;

  bool passed() const;
  // Value of a named check; false if the check was not run.
  bool check(const std::string& name) const;
};

/// Computes Y and a for s_lambda[s_mu] and checks the first-term prediction,
/// Y^nu >= a^nu >= 0 and, when requested, exact agreement with the
/// power-sum oracle.
ExpansionReport verify_first_term(const Partition& lambda, const Partition& mu, bool use_oracle,
                                  int max_degree = kDefaultMaxDegree);

/// Every (lambda |- m, mu |- n) with m, n >= 1 and mn <= max_product, ordered
/// by mn, then m, then lambda and mu revlex-decreasing.
std::vector<std::pair<Partition, Partition>> sweep_pairs(int max_product);

struct PairOutcome {
  Partition lambda;
  Partition mu;
  bool passed = false;
  ExpansionReport report;
  // Set when verification threw; the report is then incomplete.
  std::string error;
};

/// Runs verify_first_term on every pair, spread over `jobs` threads.
/// Outcomes come back in the order of `pairs`.
std::vector<PairOutcome> run_sweep(const std::vector<std::pair<Partition, Partition>>& pairs,
                                   bool use_oracle, int jobs, int max_degree = kDefaultMaxDegree);

}  // namespace plethyst
