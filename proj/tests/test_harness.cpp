#include <catch_amalgamated.hpp>

#include <gpat/harness.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace gpat;

TEST_CASE("claim registry is complete and well-formed", "[harness]") {
  const auto& claims = claim_registry();
  CHECK(claims.size() == 28);

  std::set<std::string> ids;
  for (const auto& c : claims) {
    CHECK(!c.id.empty());
    CHECK(!c.summary.empty());
    CHECK(ids.insert(c.id).second);  // unique
  }

  std::map<std::string, int> by_group;
  for (const auto& c : claims) ++by_group[c.group];
  CHECK(by_group["table"] == 6);
  CHECK(by_group["distribution"] == 6);
  CHECK(by_group["bijection"] == 7);
  CHECK(by_group["polynomial"] == 6);
  CHECK(by_group["classes"] == 2);
  CHECK(by_group["lemma2"] == 1);
}

TEST_CASE("every claim passes at a desk-scale bound", "[harness][slow]") {
  auto results = run_claims("", 5);
  REQUIRE(results.size() == 28);
  CHECK(std::is_sorted(results.begin(), results.end(),
                       [](const ClaimResult& a, const ClaimResult& b) { return a.claim < b.claim; }));
  for (const auto& r : results) {
    INFO(r.claim << ": " << r.witness);
    CHECK(r.passed);
    CHECK(r.witness.empty());
    CHECK(!r.n_range.empty());
    CHECK(r.elapsed_ms >= 0.0);
  }
  CHECK(all_passed(results));
}

TEST_CASE("claim filters select by group or id fragment", "[harness]") {
  CHECK(run_claims("table", 3).size() == 6);
  CHECK(run_claims("prop.euler", 3).size() == 2);
  CHECK(run_claims("eq.bessel_ode", 3).size() == 1);
  CHECK(run_claims("nosuchclaim", 3).empty());
  CHECK(all_passed({}));
}

TEST_CASE("grouped verification entry points", "[harness]") {
  CHECK(all_passed(verify_main_table(4)));
  CHECK(all_passed(verify_distributions(4)));
  CHECK(verify_classes(4).passed);
  CHECK(verify_lemma2(5).passed);
}

// Of the four extreme-letter statistics, three share the ballot distribution
// over the b-ac avoiders. Right-to-left maxima do NOT -- they pick up the
// ballot distribution over the mirror class (ac-b avoiders) instead. This
// test pins the smallest counterexample so the distinction survives.
TEST_CASE("rl-maxima separate from the other extreme statistics", "[harness][distribution]") {
  auto histogram = [](const char* pattern, int n, int (*stat)(std::span<const int>)) {
    std::vector<long long> h(n + 1, 0);
    for_each_avoider({parse_pattern(pattern)}, n, [&](std::span<const int> w) { ++h[stat(w)]; });
    return h;
  };
  auto ballot_row = [](int n) {
    std::vector<long long> row(n + 1, 0);
    for (int k = 0; k <= n; ++k) row[k] = static_cast<long long>(ballot(n, k));
    return row;
  };

  CHECK(histogram("b-ac", 3, count_lr_minima) == ballot_row(3));
  CHECK(histogram("b-ac", 3, count_lr_maxima) == ballot_row(3));
  CHECK(histogram("b-ac", 3, count_rl_minima) == ballot_row(3));

  CHECK(histogram("b-ac", 3, count_rl_maxima) == std::vector<long long>{0, 1, 3, 1});
  CHECK(ballot_row(3) == std::vector<long long>{0, 2, 2, 1});
  CHECK(histogram("b-ac", 4, count_rl_maxima) != ballot_row(4));

  // the mirror class restores the ballot distribution for rl-maxima
  CHECK(histogram("ac-b", 3, count_rl_maxima) == ballot_row(3));
  CHECK(histogram("ac-b", 6, count_rl_maxima) == ballot_row(6));
}
