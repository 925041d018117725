#include "plethyst/symfunc.hpp"

#include <mutex>

#include "plethyst/error.hpp"
#include "plethyst/tableau.hpp"

namespace plethyst {

std::string_view basis_tag(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::schur: return "s";
    case Basis::homogeneous: return "h";
    case Basis::powersum: return "p";
  }
  return "?";
}

Basis parse_basis(std::string_view tag) {
  if (tag == "m" || tag == "monomial") return Basis::monomial;
  if (tag == "s" || tag == "schur") return Basis::schur;
  if (tag == "h" || tag == "homogeneous") return Basis::homogeneous;
  if (tag == "p" || tag == "powersum") return Basis::powersum;
  throw ParseError("unknown basis '" + std::string(tag) + "'");
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
  SymFunc f(basis, lambda.size());
  f.add_term(lambda, 1);
  return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
  if (lambda.size() != degree_)
    throw MismatchError("term " + lambda.to_string() + " has size " +
                        std::to_string(lambda.size()) + ", expected degree " +
                        std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymFunc::assert_integral(std::string_view context) const {
  for (const auto& [lambda, c] : terms_)
    if (!is_integral(c))
      throw InvariantError(std::string(context) + ": non-integral coefficient " +
                           to_decimal(c) + " at " + lambda.to_string());
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
  if (f.basis() != g.basis() || f.degree() != g.degree())
    throw MismatchError("add: operands differ in basis or degree");
  SymFunc out = f;
  for (const auto& [lambda, c] : g.terms()) out.add_term(lambda, c);
  return out;
}

SymFunc scale(const Rational& c, const SymFunc& f) {
  SymFunc out(f.basis(), f.degree());
  if (c == 0) return out;
  for (const auto& [lambda, a] : f.terms()) out.add_term(lambda, c * a);
  return out;
}

Rational coefficient(const SymFunc& f, const Partition& lambda) {
  return f.coefficient(lambda);
}

// ---------------------------------------------------------------------------

std::size_t KostkaMatrix::position(const Partition& lambda) const {
  auto it = lookup_.find(lambda);
  if (it == lookup_.end())
    throw MismatchError("partition " + lambda.to_string() + " is not of size " +
                        std::to_string(degree));
  return it->second;
}

const Integer& KostkaMatrix::k(const Partition& lambda, const Partition& mu) const {
  return K[position(lambda)][position(mu)];
}

const Integer& KostkaMatrix::kinv(const Partition& lambda, const Partition& mu) const {
  return Kinv[position(lambda)][position(mu)];
}

std::shared_ptr<const KostkaMatrix> build_kostka_matrix(int n) {
  auto km = std::make_shared<KostkaMatrix>();
  km->degree = n;
  km->index = partitions_of(n, n);
  const auto p = km->index.size();
  for (std::size_t i = 0; i < p; ++i) km->lookup_.emplace(km->index[i], i);

  km->K.assign(p, std::vector<Integer>(p, 0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) km->K[i][j] = kostka(km->index[i], km->index[j]);
  for (std::size_t i = 0; i < p; ++i) {
    if (km->K[i][i] != 1) throw InvariantError("Kostka diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (kostka(km->index[i], km->index[j]) != 0)
        throw InvariantError("Kostka matrix is not revlex-triangular");
  }

  // Back substitution for the inverse of an upper unitriangular matrix:
  // Kinv[i][j] = -sum_{i<t<=j} K[i][t] Kinv[t][j], rows bottom-up.
  km->Kinv.assign(p, std::vector<Integer>(p, 0));
  for (std::size_t ii = p; ii-- > 0;) {
    km->Kinv[ii][ii] = 1;
    for (std::size_t j = ii + 1; j < p; ++j) {
      Integer acc = 0;
      for (std::size_t t = ii + 1; t <= j; ++t)
        if (km->K[ii][t] != 0) acc += km->K[ii][t] * km->Kinv[t][j];
      km->Kinv[ii][j] = -acc;
    }
  }
  return km;
}

std::shared_ptr<const KostkaMatrix> kostka_matrix(int n, int max_n) {
  if (n > max_n)
    throw BoundError("kostka_matrix: degree " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_n));
  if (n < 0) throw MismatchError("kostka_matrix: negative degree");

  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const KostkaMatrix>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is identical.
  auto km = build_kostka_matrix(n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(n, std::move(km)).first->second;
}

// ---------------------------------------------------------------------------

namespace {

enum class Orientation { row, column };

// out[target] += c * M[row][col], reading lambda as the row (or column)
// partition and summing over the other index.
SymFunc apply(const SymFunc& f, Basis target, const std::vector<std::vector<Integer>>& M,
              const KostkaMatrix& km, Orientation o) {
  SymFunc out(target, f.degree());
  const auto p = km.index.size();
  for (const auto& [lambda, c] : f.terms()) {
    auto i = km.position(lambda);
    for (std::size_t j = 0; j < p; ++j) {
      const Integer& e = o == Orientation::row ? M[i][j] : M[j][i];
      if (e != 0) out.add_term(km.index[j], c * Rational(e));
    }
  }
  return out;
}

SymFunc to_schur(const SymFunc& f, const KostkaMatrix& km) {
  switch (f.basis()) {
    case Basis::schur: return f;
    // m_lambda = sum_mu Kinv[lambda][mu] s_mu
    case Basis::monomial: return apply(f, Basis::schur, km.Kinv, km, Orientation::row);
    // h_mu = sum_lambda K[lambda][mu] s_lambda
    case Basis::homogeneous: return apply(f, Basis::schur, km.K, km, Orientation::column);
    case Basis::powersum: break;
  }
  throw BasisError("power-sum conversions are provided by the oracle module");
}

SymFunc from_schur(const SymFunc& f, Basis target, const KostkaMatrix& km) {
  switch (target) {
    case Basis::schur: return f;
    // s_lambda = sum_mu K[lambda][mu] m_mu
    case Basis::monomial: return apply(f, Basis::monomial, km.K, km, Orientation::row);
    // s_nu = sum_kappa Kinv[kappa][nu] h_kappa
    case Basis::homogeneous: return apply(f, Basis::homogeneous, km.Kinv, km, Orientation::column);
    case Basis::powersum: break;
  }
  throw BasisError("power-sum conversions are provided by the oracle module");
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  if (f.basis() == Basis::powersum || target == Basis::powersum)
    throw BasisError("power-sum conversions are provided by the oracle module");
  auto km = kostka_matrix(f.degree(), std::max(f.degree(), kDefaultMaxPartitionSize));
  SymFunc out = from_schur(to_schur(f, *km), target, *km);
  out.assert_integral("convert");
  return out;
}

Rational hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree())
    throw MismatchError("hall_inner: degrees " + std::to_string(f.degree()) + " and " +
                        std::to_string(g.degree()));
  auto fs = convert(f, Basis::schur);
  auto gs = convert(g, Basis::schur);
  Rational acc = 0;
  for (const auto& [lambda, c] : fs.terms()) acc += c * gs.coefficient(lambda);
  return acc;
}

std::string render(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    Rational c = it->second;
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    if (c < 0) c = -c;
    if (c != 1) out += to_decimal(c) + "·";
    out += std::string(basis_tag(f.basis())) + "[" + it->first.to_string() + "]";
  }
  return out;
}

}  // namespace plethyst
