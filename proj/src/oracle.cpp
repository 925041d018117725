#include "plethyst/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "plethyst/error.hpp"
#include "plethyst/tableau.hpp"

namespace plethyst::oracle {

Integer z(const Partition& rho) {
  Integer out = 1;
  auto parts = rho.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    auto mult = j - i;
    for (std::size_t k = 1; k <= mult; ++k) out *= Integer(parts[i]) * Integer(k);
    i = j;
  }
  return out;
}

namespace {

// Beta numbers lambda_i + (L - 1 - i) on L beads; removing a border strip
// of length r slides one bead from b down to a free position b - r.
Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int L = static_cast<int>(beta.size());
  std::vector<int> parts(L);
  for (int i = 0; i < L; ++i) parts[i] = beta[i] - (L - 1 - i);
  return Partition(std::move(parts));
}

struct PairLess {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const {
    PartitionLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

Integer character_uncached(const Partition& lambda, const Partition& rho);

Integer character_memo(const Partition& lambda, const Partition& rho) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, Integer, PairLess> memo;
  auto key = std::make_pair(lambda, rho);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Integer value = character_uncached(lambda, rho);
  std::lock_guard lock(mutex);
  memo.try_emplace(std::move(key), value);
  return value;
}

Integer character_uncached(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  const int r = rho[0];
  Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));

  const int L = lambda.length();
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
  std::set<int> beads(beta.begin(), beta.end());

  Integer total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i];
    int target = b - r;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int other : beta)
      if (other > target && other < b) ++between;
    auto moved = beta;
    moved[i] = target;
    Integer chi = character_memo(from_beta(std::move(moved)), rest);
    total += between % 2 ? -chi : chi;
  }
  return total;
}

void check_degree(int degree, int max_degree) {
  if (degree > max_degree)
    throw BoundError("degree " + std::to_string(degree) + " exceeds bound " +
                     std::to_string(max_degree));
}

void require_powersum(const SymFunc& f, const char* who) {
  if (f.basis() != Basis::powersum)
    throw BasisError(std::string(who) + " expects a power-sum input");
}

}  // namespace

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw MismatchError("character: |lambda| = " + std::to_string(lambda.size()) +
                        ", |rho| = " + std::to_string(rho.size()));
  return character_memo(lambda, rho);
}

PowerSumExpansion schur_to_p(const Partition& lambda, int max_degree) {
  check_degree(lambda.size(), max_degree);
  PowerSumExpansion out(Basis::powersum, lambda.size());
  for (const auto& rho : partitions_of(lambda.size(), max_degree)) {
    Integer chi = character(lambda, rho);
    if (chi != 0) out.add_term(rho, Rational(chi, z(rho)));
  }
  return out;
}

SymFunc p_to_schur(const PowerSumExpansion& f) {
  require_powersum(f, "p_to_schur");
  SymFunc out(Basis::schur, f.degree());
  auto shapes = partitions_of(f.degree(), std::max(f.degree(), kDefaultMaxPartitionSize));
  for (const auto& [rho, c] : f.terms())
    for (const auto& lambda : shapes) {
      Integer chi = character(lambda, rho);
      if (chi != 0) out.add_term(lambda, c * Rational(chi));
    }
  return out;
}

namespace {

// Ways to drop the parts of rho (labelled) into bins with capacities
// exactly lambda.
Integer distribution_count(const Partition& rho, const Partition& lambda) {
  std::map<std::pair<int, std::vector<int>>, Integer> memo;
  std::function<Integer(int, std::vector<int>&)> rec = [&](int j, std::vector<int>& room) {
    if (j == rho.length()) return Integer(std::all_of(room.begin(), room.end(),
                                                      [](int v) { return v == 0; }));
    auto key = std::make_pair(j, room);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (auto& bin : room) {
      if (bin < rho[j]) continue;
      bin -= rho[j];
      total += rec(j + 1, room);
      bin += rho[j];
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  std::vector<int> room(lambda.parts().begin(), lambda.parts().end());
  return rec(0, room);
}

}  // namespace

SymFunc p_to_monomial(const PowerSumExpansion& f) {
  require_powersum(f, "p_to_monomial");
  SymFunc out(Basis::monomial, f.degree());
  auto shapes = partitions_of(f.degree(), std::max(f.degree(), kDefaultMaxPartitionSize));
  for (const auto& [rho, c] : f.terms())
    for (const auto& lambda : shapes) {
      Integer r = distribution_count(rho, lambda);
      if (r != 0) out.add_term(lambda, c * Rational(r));
    }
  return out;
}

PowerSumExpansion multiply(const PowerSumExpansion& f, const PowerSumExpansion& g) {
  require_powersum(f, "multiply");
  require_powersum(g, "multiply");
  PowerSumExpansion out(Basis::powersum, f.degree() + g.degree());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      std::vector<int> parts(a.parts().begin(), a.parts().end());
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.add_term(Partition(std::move(parts)), ca * cb);
    }
  return out;
}

PowerSumExpansion pk_plethysm(int k, const PowerSumExpansion& f) {
  require_powersum(f, "pk_plethysm");
  if (k < 1) throw MismatchError("pk_plethysm: k must be positive");
  PowerSumExpansion out(Basis::powersum, k * f.degree());
  for (const auto& [rho, c] : f.terms()) {
    std::vector<int> parts(rho.parts().begin(), rho.parts().end());
    for (auto& p : parts) p *= k;
    out.add_term(Partition(std::move(parts)), c);
  }
  return out;
}

PowerSumExpansion p_plethysm(const Partition& lambda, const Partition& mu, int max_degree) {
  if (lambda.empty() || mu.empty())
    throw MismatchError("plethysm arguments must be non-empty partitions");
  check_degree(lambda.size() * mu.size(), max_degree);

  const auto inner = schur_to_p(mu, max_degree);
  std::map<int, PowerSumExpansion> inner_k;
  auto pk_inner = [&](int k) -> const PowerSumExpansion& {
    auto it = inner_k.find(k);
    if (it == inner_k.end()) it = inner_k.emplace(k, pk_plethysm(k, inner)).first;
    return it->second;
  };

  const auto outer = schur_to_p(lambda, max_degree);
  PowerSumExpansion out(Basis::powersum, lambda.size() * mu.size());
  for (const auto& [rho, c] : outer.terms()) {
    // p_rho[g] = prod_i p_{rho_i}[g]
    PowerSumExpansion term = PowerSumExpansion::basis_element(Basis::powersum, Partition{});
    for (int part : rho.parts()) term = multiply(term, pk_inner(part));
    out = add(out, scale(c, term));
  }
  return out;
}

SymFunc p_plethysm_schur(const Partition& lambda, const Partition& mu, int max_degree) {
  auto out = p_to_schur(p_plethysm(lambda, mu, max_degree));
  out.assert_integral("p_plethysm_schur");
  return out;
}

Polynomial finite_variable_expansion(const Partition& lambda, const Partition& mu, int s) {
  if (s < 1) throw MismatchError("finite_variable_expansion: s must be positive");
  // Monomials of s_mu(x_1..x_s), one letter per tableau, largest first.
  std::vector<std::vector<int>> letters;
  for (const auto& t : enumerate_ssyt_bounded(mu, s)) {
    std::vector<int> exponent(s, 0);
    for (const auto& row : t.rows())
      for (int v : row) ++exponent[v - 1];
    letters.push_back(std::move(exponent));
  }
  std::stable_sort(letters.begin(), letters.end(), std::greater<>());

  Polynomial out;
  const int N = static_cast<int>(letters.size());
  for (const auto& u : enumerate_ssyt_bounded(lambda, N)) {
    std::vector<int> exponent(s, 0);
    for (const auto& row : u.rows())
      for (int letter : row)
        for (int i = 0; i < s; ++i) exponent[i] += letters[letter - 1][i];
    out[exponent] += 1;
  }
  return out;
}

}  // namespace plethyst::oracle
