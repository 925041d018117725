#include <doctest.h>

#include "plethyst/serialize.hpp"
#include "plethyst/verify.hpp"

using namespace plethyst;

TEST_CASE("verification report for s_2[s_2]") {
  auto r = verify_first_term({2}, {2}, true);
  CHECK(r.passed());
  CHECK(r.predicted_first_term == Partition{4});
  CHECK(r.observed_first_term == Partition{4});
  CHECK(r.first_term_coefficient == 1);
  CHECK(r.check(check::oracle_agreement));
  CHECK(r.checks.size() == 7);
  CHECK_FALSE(r.check("no_such_check"));

  auto j = to_json(r);
  CHECK(j["lambda"].dump() == "[2]");
  CHECK(j["schur_coeffs"].dump() ==
        R"([{"partition":[4],"coeff":"1"},{"partition":[2,2],"coeff":"1"}])");
  CHECK(j["first_term_coefficient"] == "1");
  CHECK(j["checks"]["y_dominates_a"] == true);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"lambda", "mu", "monomial_coeffs", "schur_coeffs",
                                         "predicted_first_term", "observed_first_term",
                                         "first_term_coefficient", "checks"});
}

TEST_CASE("verification report edge pairs") {
  auto identity = verify_first_term({1}, {3, 1}, false);
  CHECK(identity.passed());
  CHECK(identity.observed_first_term == Partition{3, 1});
  CHECK(identity.checks.size() == 6);

  auto r = verify_first_term({2, 1}, {1, 1}, true);
  CHECK(r.passed());
  CHECK(r.predicted_first_term == Partition{3, 2, 1});
}

TEST_CASE("sweep pairs and parallel sweep") {
  CHECK(sweep_pairs(0).empty());
  // mn = 1: 1 pair; mn = 2: (1)x p(2) + p(2)x(1) = 4; mn = 3: 3 + 3; mn = 4: 5 + 4 + 5.
  CHECK(sweep_pairs(4).size() == 1 + 4 + 6 + 14);
  auto pairs = sweep_pairs(5);
  auto serial = run_sweep(pairs, false, 1);
  auto parallel = run_sweep(pairs, false, 4);
  REQUIRE(serial.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(serial[i].passed);
    CHECK(serial[i].lambda == pairs[i].first);
    CHECK(parallel[i].lambda == serial[i].lambda);
    CHECK(parallel[i].mu == serial[i].mu);
    CHECK(to_json(parallel[i].report) == to_json(serial[i].report));
  }
}
