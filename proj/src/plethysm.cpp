#include "plethyst/plethysm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "plethyst/error.hpp"

namespace plethyst {

PlethTableau::PlethTableau(Partition outer, Partition inner, std::vector<Tableau> cells)
    : outer_(std::move(outer)), inner_(std::move(inner)), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != outer_.size())
    throw ParseError("composite tableau needs one inner tableau per outer cell");
  for (const auto& t : cells_)
    if (!(t.shape() == inner_))
      throw ParseError("inner tableau of shape " + t.shape().to_string() + ", expected " +
                       inner_.to_string());
  for (int r = 0; r < outer_.length(); ++r)
    for (int c = 0; c < outer_[r]; ++c) {
      if (c > 0 && tableau_cmp(cell(r, c - 1), cell(r, c)) > 0)
        throw ParseError("composite tableau rows must weakly increase");
      if (r > 0 && tableau_cmp(cell(r - 1, c), cell(r, c)) >= 0)
        throw ParseError("composite tableau columns must strictly increase");
    }
}

const Tableau& PlethTableau::cell(int row, int col) const {
  int offset = 0;
  for (int r = 0; r < row; ++r) offset += outer_[r];
  return cells_[offset + col];
}

Weight PlethTableau::weight() const {
  std::vector<int> counts;
  for (const auto& t : cells_) {
    auto w = t.weight();
    if (counts.size() < w.counts.size()) counts.resize(w.counts.size(), 0);
    for (std::size_t k = 0; k < w.counts.size(); ++k) counts[k] += w.counts[k];
  }
  return Weight(std::move(counts));
}

namespace {

// Inner tableaux available to the filler, sorted by increasing word so that
// candidate index order coincides with tableau_cmp.
struct CandidatePool {
  std::vector<Tableau> tableaux;
  std::vector<std::vector<int>> weights;  // each padded to `letters`
  int letters = 0;
};

CandidatePool make_pool(const Partition& mu, int max_entry, const std::vector<int>* budget) {
  CandidatePool pool;
  pool.letters = std::max(max_entry, 0);
  auto candidates = budget ? enumerate_ssyt_within(mu, Weight(*budget))
                           : enumerate_ssyt_bounded(mu, max_entry);
  for (auto& t : candidates) {
    std::vector<int> w(pool.letters, 0);
    for (const auto& row : t.rows())
      for (int v : row) ++w[v - 1];
    pool.tableaux.push_back(std::move(t));
    pool.weights.push_back(std::move(w));
  }
  std::vector<std::size_t> order(pool.tableaux.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tableau_cmp(pool.tableaux[a], pool.tableaux[b]) < 0;
  });
  CandidatePool sorted;
  sorted.letters = pool.letters;
  for (auto i : order) {
    sorted.tableaux.push_back(std::move(pool.tableaux[i]));
    sorted.weights.push_back(std::move(pool.weights[i]));
  }
  return sorted;
}

// Fills the cells of lambda row by row with candidate indices. Along a row
// indices weakly increase, down a column they strictly increase. With a
// budget, each placed candidate's weight is charged against it.
template <typename Visit>
class CompositeFiller {
 public:
  CompositeFiller(const Partition& lambda, const CandidatePool& pool,
                  std::vector<int> budget, bool weighted, Visit& visit)
      : lambda_(lambda), pool_(pool), budget_(std::move(budget)), weighted_(weighted),
        visit_(visit) {
    grid_.resize(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) grid_[r].assign(lambda[r], 0);
    if (!lambda.empty()) {
      column_height_.assign(lambda[0], 0);
      for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c) ++column_height_[c];
    }
  }

  void run() { fill(0, 0); }

 private:
  void fill(int r, int c) {
    if (r == lambda_.length()) {
      visit_(grid_);
      return;
    }
    if (c == lambda_[r]) {
      fill(r + 1, 0);
      return;
    }
    long lo = 0;
    if (c > 0) lo = std::max<long>(lo, grid_[r][c - 1]);
    if (r > 0) lo = std::max<long>(lo, grid_[r - 1][c] + 1);
    long hi = static_cast<long>(pool_.tableaux.size()) - (column_height_[c] - r);
    for (long idx = lo; idx <= hi; ++idx) {
      const auto& w = pool_.weights[idx];
      if (weighted_ && !charge(w)) continue;
      grid_[r][c] = idx;
      fill(r, c + 1);
      if (weighted_) refund(w);
    }
  }

  bool charge(const std::vector<int>& w) {
    for (int k = 0; k < pool_.letters; ++k)
      if (w[k] > budget_[k]) return false;
    for (int k = 0; k < pool_.letters; ++k) budget_[k] -= w[k];
    return true;
  }
  void refund(const std::vector<int>& w) {
    for (int k = 0; k < pool_.letters; ++k) budget_[k] += w[k];
  }

  const Partition& lambda_;
  const CandidatePool& pool_;
  std::vector<int> budget_;
  bool weighted_;
  Visit& visit_;
  std::vector<std::vector<long>> grid_;
  std::vector<int> column_height_;
};

template <typename Visit>
void fill_composite(const Partition& lambda, const CandidatePool& pool, std::vector<int> budget,
                    bool weighted, Visit& visit) {
  CompositeFiller<Visit> filler(lambda, pool, std::move(budget), weighted, visit);
  filler.run();
}

void check_sizes(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() * mu.size())
    throw MismatchError("weight " + nu.to_string() + " has size " + std::to_string(nu.size()) +
                        ", expected " + std::to_string(lambda.size() * mu.size()));
}

template <typename Visit>
void fill_for_weight(const Partition& lambda, const Partition& mu, const Partition& nu,
                     Visit& visit, CandidatePool& pool) {
  std::vector<int> budget(nu.parts().begin(), nu.parts().end());
  pool = make_pool(mu, nu.length(), &budget);
  fill_composite(lambda, pool, std::move(budget), true, visit);
}

void check_degree(const Partition& lambda, const Partition& mu, int max_degree) {
  if (lambda.empty() || mu.empty())
    throw MismatchError("plethysm arguments must be non-empty partitions");
  int mn = lambda.size() * mu.size();
  if (mn > max_degree)
    throw BoundError("degree " + std::to_string(mn) + " exceeds bound " +
                     std::to_string(max_degree));
}

}  // namespace

std::vector<PlethTableau> enumerate_pleth_weight(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu) {
  check_sizes(lambda, mu, nu);
  std::vector<PlethTableau> out;
  CandidatePool pool;
  auto visit = [&](const std::vector<std::vector<long>>& grid) {
    std::vector<Tableau> cells;
    for (const auto& row : grid)
      for (long idx : row) cells.push_back(pool.tableaux[idx]);
    out.emplace_back(lambda, mu, std::move(cells));
  };
  fill_for_weight(lambda, mu, nu, visit, pool);
  return out;
}

std::uint64_t Y(const Partition& lambda, const Partition& mu, const Partition& nu) {
  check_sizes(lambda, mu, nu);
  std::uint64_t n = 0;
  CandidatePool pool;
  auto visit = [&](const std::vector<std::vector<long>>&) { ++n; };
  fill_for_weight(lambda, mu, nu, visit, pool);
  return n;
}

std::uint64_t count_pleth_bounded(const Partition& lambda, const Partition& mu, int max_entry) {
  std::uint64_t n = 0;
  auto pool = make_pool(mu, max_entry, nullptr);
  auto visit = [&](const std::vector<std::vector<long>>&) { ++n; };
  fill_composite(lambda, pool, {}, false, visit);
  return n;
}

SymFunc monomial_expansion(const Partition& lambda, const Partition& mu, int max_degree) {
  check_degree(lambda, mu, max_degree);
  int mn = lambda.size() * mu.size();
  SymFunc out(Basis::monomial, mn);
  for (const auto& nu : partitions_of(mn, max_degree)) {
    auto y = Y(lambda, mu, nu);
    if (y) out.add_term(nu, Rational(Integer(y)));
  }
  return out;
}

SymFunc inverse_kostka_transform(const SymFunc& monomial) {
  if (monomial.basis() != Basis::monomial)
    throw BasisError("inverse_kostka_transform expects a monomial-basis input");
  auto km = kostka_matrix(monomial.degree(), std::max(monomial.degree(), kDefaultMaxPartitionSize));
  SymFunc out(Basis::schur, monomial.degree());
  for (const auto& nu : km->index) {
    auto j = km->position(nu);
    Rational a = 0;
    for (const auto& [kappa, y] : monomial.terms()) {
      const auto& k = km->Kinv[km->position(kappa)][j];
      if (k != 0) a += Rational(k) * y;
    }
    out.add_term(nu, a);
  }
  return out;
}

SymFunc schur_expansion(const SymFunc& monomial) {
  monomial.assert_integral("schur_expansion");
  auto out = inverse_kostka_transform(monomial);
  out.assert_integral("schur_expansion");
  for (const auto& [nu, a] : out.terms())
    if (a < 0)
      throw InvariantError("negative Schur coefficient " + to_decimal(a) + " at " +
                           nu.to_string());
  return out;
}

SymFunc schur_expansion(const Partition& lambda, const Partition& mu, int max_degree) {
  return schur_expansion(monomial_expansion(lambda, mu, max_degree));
}

std::vector<int> pi_star(std::span<const int> pi, const Partition& nu) {
  const auto l = pi.size();
  if (static_cast<int>(l) < nu.length())
    throw MismatchError("pi_star: permutation shorter than the partition");
  std::vector<bool> seen(l, false);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(l) || seen[v - 1])
      throw ParseError("pi_star: not a permutation of [1, l]");
    seen[v - 1] = true;
  }
  std::vector<int> out(l);
  for (std::size_t i = 0; i < l; ++i) out[i] = nu[pi[i] - 1] - pi[i] + static_cast<int>(i + 1);
  return out;
}

namespace {

int sign_of(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

template <typename YLookup>
Integer jacobi_trudi_sum(const Partition& nu, int max_length, YLookup y_of) {
  if (nu.length() > max_length)
    throw BoundError("Jacobi-Trudi sum over S_" + std::to_string(nu.length()) +
                     " exceeds permutation length bound " + std::to_string(max_length));
  std::vector<int> perm(nu.length());
  std::iota(perm.begin(), perm.end(), 1);
  Integer total = 0;
  do {
    auto comp = pi_star(perm, nu);
    if (std::any_of(comp.begin(), comp.end(), [](int v) { return v < 0; })) continue;
    // h is symmetric in its index and h_0 = 1.
    std::sort(comp.begin(), comp.end(), std::greater<>());
    while (!comp.empty() && comp.back() == 0) comp.pop_back();
    Integer y = y_of(Partition(std::move(comp)));
    if (y != 0) total += sign_of(perm) * y;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

Integer coeff_via_jacobi_trudi(const Partition& lambda, const Partition& mu, const Partition& nu,
                               int max_length) {
  check_sizes(lambda, mu, nu);
  std::map<Partition, Integer, PartitionLess> cache;
  return jacobi_trudi_sum(nu, max_length, [&](const Partition& kappa) {
    auto it = cache.find(kappa);
    if (it == cache.end()) it = cache.emplace(kappa, Integer(Y(lambda, mu, kappa))).first;
    return it->second;
  });
}

Integer coeff_via_jacobi_trudi(const SymFunc& monomial, const Partition& nu, int max_length) {
  if (monomial.basis() != Basis::monomial)
    throw BasisError("coeff_via_jacobi_trudi expects a monomial-basis input");
  if (nu.size() != monomial.degree())
    throw MismatchError("partition size differs from the expansion degree");
  return jacobi_trudi_sum(nu, max_length, [&](const Partition& kappa) {
    return boost::multiprecision::numerator(monomial.coefficient(kappa));
  });
}

Partition first_term(const Partition& lambda, const Partition& mu) {
  if (lambda.empty() || mu.empty())
    throw MismatchError("first_term: lambda and mu must be non-empty");
  const int m = lambda.size();
  const int lp = mu.length();
  std::vector<int> parts;
  for (int i = 0; i + 1 < lp; ++i) parts.push_back(m * mu[i]);
  parts.push_back(m * (mu[lp - 1] - 1) + lambda[0]);
  for (int i = 1; i < lambda.length(); ++i) parts.push_back(lambda[i]);
  std::erase(parts, 0);
  try {
    return Partition(std::move(parts));
  } catch (const ParseError& e) {
    throw InvariantError(std::string("first_term produced a non-partition: ") + e.what());
  }
}

std::vector<Tableau> leading_tableaux(const Partition& mu, int count) {
  if (mu.empty()) throw MismatchError("leading_tableaux: mu must be non-empty");
  if (count < 1) throw MismatchError("leading_tableaux: count must be positive");
  std::vector<std::vector<int>> rows(mu.length());
  for (int r = 0; r < mu.length(); ++r) rows[r].assign(mu[r], r + 1);
  std::vector<Tableau> out;
  out.emplace_back(mu, rows);
  const int lp = mu.length();
  for (int k = 2; k <= count; ++k) {
    auto raised = rows;
    raised.back().back() = lp + k - 1;
    out.emplace_back(mu, std::move(raised));
  }
  return out;
}

}  // namespace plethyst
