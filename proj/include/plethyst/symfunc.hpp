#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "plethyst/numeric.hpp"
#include "plethyst/partition.hpp"

namespace plethyst {

enum class Basis { monomial, schur, homogeneous, powersum };

// One-letter tag used in text and JSON: "m", "s", "h", "p".
std::string_view basis_tag(Basis b);
Basis parse_basis(std::string_view tag);

using CoeffMap = std::map<Partition, Rational, PartitionLess>;

/// A homogeneous symmetric function of fixed degree, stored as exact
/// coefficients over one basis. Zero coefficients are never stored.
/// Coefficients in the m, s and h bases are integers; only the power-sum
/// basis admits proper fractions.
class SymFunc {
 public:
  SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  // A single basis element b_lambda.
  static SymFunc basis_element(Basis basis, const Partition& lambda);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const CoeffMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& lambda) const;

  // Adds c to the coefficient at lambda, dropping the entry if it cancels.
  void add_term(const Partition& lambda, const Rational& c);

  // Throws InvariantError unless every coefficient is an integer.
  void assert_integral(std::string_view context) const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Basis basis_;
  int degree_;
  CoeffMap terms_;
};

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc scale(const Rational& c, const SymFunc& f);
Rational coefficient(const SymFunc& f, const Partition& lambda);

/// Kostka matrix of one degree and its inverse, indexed by the partitions
/// of n in revlex-decreasing order.
///
///   s_lambda = sum_mu K[lambda][mu] m_mu
///   m_lambda = sum_mu Kinv[lambda][mu] s_mu
///   s_nu     = sum_kappa Kinv[kappa][nu] h_kappa
///
/// Both matrices are upper unitriangular in that order: entries vanish
/// whenever the row partition is revlex-smaller than the column partition.
struct KostkaMatrix {
  int degree = 0;
  std::vector<Partition> index;
  std::vector<std::vector<Integer>> K;
  std::vector<std::vector<Integer>> Kinv;

  // Position of lambda in `index`; throws MismatchError for a wrong size.
  std::size_t position(const Partition& lambda) const;
  const Integer& k(const Partition& lambda, const Partition& mu) const;
  const Integer& kinv(const Partition& lambda, const Partition& mu) const;

 private:
  std::map<Partition, std::size_t, PartitionLess> lookup_;
  friend std::shared_ptr<const KostkaMatrix> build_kostka_matrix(int n);
};

/// Cached per degree; the cache is process-wide and thread-safe.
std::shared_ptr<const KostkaMatrix> kostka_matrix(int n, int max_n = kDefaultMaxPartitionSize);

/// Re-expresses f over another of the m, s, h bases. Conversions that touch
/// the power-sum basis are provided by the oracle module; asking for one
/// here throws BasisError.
SymFunc convert(const SymFunc& f, Basis target);

/// Hall inner product, for which the Schur functions are orthonormal.
Rational hall_inner(const SymFunc& f, const SymFunc& g);

/// Terms in revlex-decreasing order, e.g. "s[4] + s[2,2]" or
/// "m[4] + 2·m[2,1,1]". The zero function renders as "0".
std::string render(const SymFunc& f);

}  // namespace plethyst
