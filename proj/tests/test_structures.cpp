#include <catch_amalgamated.hpp>

#include <gpat/involution.hpp>
#include <gpat/lattice_path.hpp>
#include <gpat/set_partition.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace gpat;

TEST_CASE("set partitions canonicalize blocks and elements", "[partition]") {
  SetPartition p(5, {{3, 1}, {4, 2}, {5}});
  CHECK(p.ground_size() == 5);
  CHECK(p.block_count() == 3);
  CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 3}, {2, 4}, {5}});
  CHECK(to_string(p) == "1,3/2,4/5");

  CHECK(SetPartition().ground_size() == 0);
  CHECK(to_string(SetPartition()) == "");
}

TEST_CASE("set partition validation", "[partition]") {
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), std::invalid_argument);         // 3 missing
  CHECK_THROWS_AS(SetPartition(2, {{1}, {1, 2}}), std::invalid_argument);    // 1 twice
  CHECK_THROWS_AS(SetPartition(1, {{1}, {}}), std::invalid_argument);        // empty block
  CHECK_THROWS_AS(SetPartition(2, {{0, 1, 2}}), std::invalid_argument);      // 0 out of range
  CHECK_THROWS_AS(SetPartition(2, {{1, 2, 3}}), std::invalid_argument);      // 3 out of range
  CHECK_THROWS_AS(SetPartition(-1, {}), std::invalid_argument);
}

TEST_CASE("set partition text round trip", "[partition]") {
  SetPartition p = parse_set_partition("1,3,5/2,6,9/4,7/8");
  CHECK(p.ground_size() == 9);
  CHECK(p.block_count() == 4);
  CHECK(to_string(p) == "1,3,5/2,6,9/4,7/8");

  // parsing canonicalizes block order
  CHECK(to_string(parse_set_partition("3,5/1,2,4")) == "1,2,4/3,5");
  CHECK(parse_set_partition("").ground_size() == 0);

  CHECK_THROWS_AS(parse_set_partition("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_partition("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_partition("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set_partition("1,3"), std::invalid_argument);  // 2 missing
}

TEST_CASE("non-overlapping means no half-interleaved blocks", "[partition]") {
  CHECK(is_non_overlapping(parse_set_partition("1,2,5,13/3,8/4,6,7/9/10,11,12")));
  CHECK(is_non_overlapping(parse_set_partition("1,4/2,3")));    // nested is fine
  CHECK(is_non_overlapping(parse_set_partition("1,2/3,4")));    // disjoint spans too
  CHECK(is_non_overlapping(parse_set_partition("1,5/2,4/3")));
  CHECK_FALSE(is_non_overlapping(parse_set_partition("1,3/2,4")));
  CHECK_FALSE(is_non_overlapping(parse_set_partition("1,3/2,4,5")));
  CHECK(is_non_overlapping(SetPartition()));
}

TEST_CASE("monotone means nested spans never happen", "[partition]") {
  CHECK(is_monotone(parse_set_partition("1,4/2,5/3")));
  CHECK(is_monotone(parse_set_partition("1/2/3")));
  CHECK(is_monotone(parse_set_partition("1,2,5,7/3,8/4,6,12/9/10,11,13")));
  CHECK_FALSE(is_monotone(parse_set_partition("1,5/2,4/3")));
  CHECK_FALSE(is_monotone(parse_set_partition("1,6/2,4/3,5")));
  CHECK(is_monotone(SetPartition()));
}

TEST_CASE("partition stream walks restricted-growth strings", "[partition][stream]") {
  PartitionStream empty(0);
  auto first = empty.next();
  REQUIRE(first.has_value());
  CHECK(first->block_count() == 0);
  CHECK(empty.next() == std::nullopt);

  std::vector<std::string> seen;
  for_each_partition(3, [&](const SetPartition& p) { seen.push_back(to_string(p)); });
  CHECK(seen == std::vector<std::string>{"1,2,3", "1,2/3", "1,3/2", "1/2,3", "1/2/3"});

  long long total = 0;
  for_each_partition(8, [&](const SetPartition&) { ++total; });
  CHECK(total == 4140);

  CHECK_THROWS_AS(PartitionStream(13), std::domain_error);
}

TEST_CASE("involutions decompose into 2-cycles and fixed points", "[involution]") {
  InvolutionPerm inv = make_involution(parse_permutation("826543719"));
  CHECK(inv.pairs == std::vector<std::pair<int, int>>{{1, 8}, {3, 6}, {4, 5}});
  CHECK(inv.fixed == std::vector<int>{2, 7, 9});

  CHECK(is_involution(parse_permutation("21")));
  CHECK(is_involution(Permutation()));
  CHECK_FALSE(is_involution(parse_permutation("231")));
  CHECK_THROWS_AS(make_involution(parse_permutation("231")), std::domain_error);
}

TEST_CASE("involution stream matches filtering S_n", "[involution][stream]") {
  const std::vector<long long> counts = {1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 0; n <= 8; ++n) {
    long long total = 0;
    for_each_involution(n, [&](const InvolutionPerm& inv) {
      CHECK(is_involution(inv.perm));
      ++total;
    });
    CHECK(total == counts[n]);
  }

  for (int n = 0; n <= 5; ++n) {
    std::set<std::vector<int>> streamed, filtered;
    for_each_involution(n, [&](const InvolutionPerm& inv) { streamed.insert(inv.perm.word()); });
    for_each_permutation(n, [&](std::span<const int> w) {
      Permutation p(std::vector<int>(w.begin(), w.end()));
      if (is_involution(p)) filtered.insert(p.word());
    });
    CHECK(streamed == filtered);
  }
}

TEST_CASE("path words validate height and alphabet", "[path]") {
  CHECK(DyckPath("ud").length() == 2);
  CHECK(DyckPath().empty());
  CHECK(MotzkinPath("ulld").length() == 4);
  CHECK_THROWS_AS(DyckPath("du"), std::invalid_argument);   // dips below the axis
  CHECK_THROWS_AS(DyckPath("uud"), std::invalid_argument);  // never returns
  CHECK_THROWS_AS(DyckPath("uxd"), std::invalid_argument);  // bad letter
  CHECK_THROWS_AS(DyckPath("ulld"), std::invalid_argument); // level steps are not Dyck
  CHECK_THROWS_AS(MotzkinPath("lul"), std::invalid_argument);
}

TEST_CASE("return steps and first-return decomposition", "[path]") {
  CHECK(return_steps(DyckPath()) == 0);
  CHECK(return_steps(DyckPath("ud")) == 1);
  CHECK(return_steps(DyckPath("udud")) == 2);
  CHECK(return_steps(DyckPath("uudd")) == 1);
  CHECK(return_steps(DyckPath("uuduuddd")) == 1);

  auto [inside, rest] = first_return_decomposition(DyckPath("udud"));
  CHECK(inside == DyckPath());
  CHECK(rest == DyckPath("ud"));

  auto [inside2, rest2] = first_return_decomposition(DyckPath("uuduuddd"));
  CHECK(inside2 == DyckPath("uduudd"));
  CHECK(rest2 == DyckPath());

  CHECK_THROWS_AS(first_return_decomposition(DyckPath()), std::domain_error);

  // splitting at the first return is an exact factorization
  for_each_dyck_path(5, [](const DyckPath& p) {
    auto [a, b] = first_return_decomposition(p);
    CHECK("u" + a.steps() + "d" + b.steps() == p.steps());
  });
}

TEST_CASE("dyck path stream is lexicographic and complete", "[path][stream]") {
  DyckPathStream empty(0);
  REQUIRE(empty.next().has_value());
  CHECK(empty.next() == std::nullopt);

  std::vector<std::string> seen;
  for_each_dyck_path(3, [&](const DyckPath& p) { seen.push_back(p.steps()); });
  CHECK(seen == std::vector<std::string>{"ududud", "uduudd", "uuddud", "uududd", "uuuddd"});

  long long total = 0;
  for_each_dyck_path(7, [&](const DyckPath&) { ++total; });
  CHECK(total == 429);
}

TEST_CASE("motzkin path stream is lexicographic and complete", "[path][stream]") {
  std::vector<std::string> seen;
  for_each_motzkin_path(3, [&](const MotzkinPath& p) { seen.push_back(p.steps()); });
  CHECK(seen == std::vector<std::string>{"lll", "lud", "udl", "uld"});

  std::vector<std::string> two;
  for_each_motzkin_path(2, [&](const MotzkinPath& p) { two.push_back(p.steps()); });
  CHECK(two == std::vector<std::string>{"ll", "ud"});

  long long total = 0;
  for_each_motzkin_path(8, [&](const MotzkinPath&) { ++total; });
  CHECK(total == 323);
}
