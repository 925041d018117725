#include "plethyst/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "plethyst/error.hpp"
#include "plethyst/oracle.hpp"

namespace plethyst {

bool ExpansionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

bool ExpansionReport::check(const std::string& name) const {
  for (const auto& [n, ok] : checks)
    if (n == name) return ok;
  return false;
}

ExpansionReport verify_first_term(const Partition& lambda, const Partition& mu, bool use_oracle,
                                  int max_degree) {
  ExpansionReport report;
  report.lambda = lambda;
  report.mu = mu;
  report.monomial_coeffs = monomial_expansion(lambda, mu, max_degree);
  report.schur_coeffs = inverse_kostka_transform(report.monomial_coeffs);
  report.predicted_first_term = first_term(lambda, mu);

  const auto& a = report.schur_coeffs;
  const auto& y = report.monomial_coeffs;
  if (!a.is_zero()) {
    report.observed_first_term = a.terms().rbegin()->first;
    report.first_term_coefficient = boost::multiprecision::numerator(a.terms().rbegin()->second);
  }
  const auto& nu0 = report.predicted_first_term;

  report.checks.emplace_back(check::first_term_match, report.observed_first_term == nu0);
  report.checks.emplace_back(check::first_term_coefficient_one,
                             !a.is_zero() && report.first_term_coefficient == 1);
  report.checks.emplace_back(check::y_first_term_one, y.coefficient(nu0) == 1);
  bool vanishes = true;
  for (const auto& [nu, c] : y.terms())
    if (revlex_cmp(nu, nu0) > 0) vanishes = false;
  report.checks.emplace_back(check::y_vanishes_above_first_term, vanishes);

  bool dominates = true, nonnegative = true;
  for (const auto& nu : partitions_of(y.degree(), std::max(y.degree(), max_degree))) {
    auto a_nu = a.coefficient(nu);
    if (y.coefficient(nu) < a_nu) dominates = false;
    if (a_nu < 0 || !is_integral(a_nu)) nonnegative = false;
  }
  report.checks.emplace_back(check::y_dominates_a, dominates);
  report.checks.emplace_back(check::a_nonnegative, nonnegative);

  if (use_oracle)
    report.checks.emplace_back(check::oracle_agreement,
                               oracle::p_plethysm_schur(lambda, mu, max_degree) == a);
  return report;
}

std::vector<std::pair<Partition, Partition>> sweep_pairs(int max_product) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int mn = 1; mn <= max_product; ++mn)
    for (int m = 1; m <= mn; ++m) {
      if (mn % m) continue;
      const int n = mn / m;
      for (const auto& lambda : partitions_of(m, max_product))
        for (const auto& mu : partitions_of(n, max_product)) out.emplace_back(lambda, mu);
    }
  return out;
}

std::vector<PairOutcome> run_sweep(const std::vector<std::pair<Partition, Partition>>& pairs,
                                   bool use_oracle, int jobs, int max_degree) {
  std::vector<PairOutcome> outcomes(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
      auto& out = outcomes[i];
      out.lambda = pairs[i].first;
      out.mu = pairs[i].second;
      try {
        out.report = verify_first_term(out.lambda, out.mu, use_oracle, max_degree);
        out.passed = out.report.passed();
      } catch (const std::exception& e) {
        out.error = e.what();
        out.passed = false;
      }
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
  if (jobs <= 1) {
    worker();
    return outcomes;
  }
  std::vector<std::jthread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  threads.clear();
  return outcomes;
}

}  // namespace plethyst
