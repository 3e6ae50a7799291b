// Acceptance suite: one check per advertised guarantee, each printed as a
// single PASS/FAIL line. Exits nonzero if anything fails. All expected values
// are hard-coded here, independent of the library's own sequence code.

#include <gpat/gpat.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

using namespace gpat;

namespace {

std::vector<GeneralizedPattern> pats(const std::vector<const char*>& texts) {
  std::vector<GeneralizedPattern> out;
  for (const char* t : texts) out.push_back(parse_pattern(t));
  return out;
}

std::string fail_at(int n, const std::string& what) {
  return "n=" + std::to_string(n) + ": " + what;
}

// 1. Enumerated avoidance-class sizes match the printed sequences, n <= 9.
std::string check_main_table() {
  struct Row {
    std::vector<const char*> patterns;
    std::vector<long long> expected;
    const char* name;
  };
  const std::vector<Row> rows = {
      {{"a-bc"}, {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147}, "bell"},
      {{"a-cb"}, {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147}, "bell"},
      {{"b-ac"}, {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}, "catalan"},
      {{"a-bc", "ab-c"}, {1, 1, 2, 5, 14, 43, 143, 509, 1922, 7651}, "bessel"},
      {{"a-bc", "a-cb"}, {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620}, "involutions"},
      {{"a-bc", "ac-b"}, {1, 1, 2, 4, 9, 21, 51, 127, 323, 835}, "motzkin"},
  };
  for (const auto& row : rows) {
    std::vector<GeneralizedPattern> ps;
    for (const char* t : row.patterns) ps.push_back(parse_pattern(t));
    for (int n = 0; n <= 9; ++n) {
      long long got = count_avoiders(ps, n);
      if (got != row.expected[n])
        return fail_at(n, std::string(row.name) + " expects " +
                              std::to_string(row.expected[n]) + ", class has " +
                              std::to_string(got));
    }
  }
  return "";
}

// 2. The worked examples, byte-exact.
std::string check_worked_examples() {
  const SetPartition blocks = parse_set_partition("1,3,5/2,6,9/4,7/8");
  if (to_string(partition_to_abc_avoider(blocks)) != "847296153")
    return "a-bc standard form of 1,3,5/2,6,9/4,7/8 is not 847296153";
  if (to_string(partition_to_acb_avoider(blocks)) != "847269135")
    return "a-cb standard form of 1,3,5/2,6,9/4,7/8 is not 847269135";
  if (to_string(involution_to_avoider(parse_permutation("826543719"))) != "974536218")
    return "image of involution 826543719 is not 974536218";
  if (perm_to_motzkin(parse_permutation("76453281")).steps() != "ulludldl")
    return "motzkin image of 76453281 is not ulludldl";
  const SetPartition nop = parse_set_partition("1,2,5,13/3,8/4,6,7/9/10,11,12");
  Permutation composed = monotone_partition_to_avoider(nop_to_monotone(nop));
  if (to_string(composed) != "10,13,11,9,4,12,6,3,8,1,7,5,2")
    return "transcribed standard form of the 13-element example is " + to_string(composed);
  return "";
}

// 3. Printed polynomial tables, plus cross-method agreement.
std::string check_polynomial_tables() {
  const std::vector<std::vector<long long>> a_table = {
      {1},
      {0, 1},
      {0, 1, 1},
      {0, 0, 3, 1},
      {0, 0, 3, 6, 1},
      {0, 0, 0, 15, 10, 1},
      {0, 0, 0, 15, 45, 15, 1},
      {0, 0, 0, 0, 105, 105, 21, 1},
  };
  const std::vector<std::vector<long long>> y_table = {
      {1},
      {1, 1},
      {1, 3, 3},
      {1, 6, 15, 15},
      {1, 10, 45, 105, 105},
      {1, 15, 105, 420, 945, 945},
  };
  for (int n = 0; n <= 7; ++n) {
    IntPolynomial want{std::vector<int128>(a_table[n].begin(), a_table[n].end())};
    for (PolyMethod m : {PolyMethod::Enumerate, PolyMethod::Recurrence, PolyMethod::Explicit,
                         PolyMethod::Involution})
      if (eulerian_avoid_poly(n, m) != want)
        return fail_at(n, "an eulerian-avoid method differs from the printed table");
  }
  for (int n = 0; n <= 5; ++n) {
    IntPolynomial want{std::vector<int128>(y_table[n].begin(), y_table[n].end())};
    for (PolyMethod m : {PolyMethod::Recurrence, PolyMethod::Explicit, PolyMethod::Involution})
      if (bessel_poly(n, m) != want)
        return fail_at(n, "a bessel method differs from the printed table");
  }
  for (int n = 8; n <= 20; ++n) {
    IntPolynomial a = eulerian_avoid_poly(n, PolyMethod::Explicit);
    if (eulerian_avoid_poly(n, PolyMethod::Recurrence) != a ||
        eulerian_avoid_poly(n, PolyMethod::Involution) != a)
      return fail_at(n, "eulerian-avoid closed forms disagree");
  }
  for (int n = 6; n <= 20; ++n) {
    IntPolynomial y = bessel_poly(n, PolyMethod::Explicit);
    if (bessel_poly(n, PolyMethod::Recurrence) != y ||
        bessel_poly(n, PolyMethod::Involution) != y)
      return fail_at(n, "bessel closed forms disagree");
  }
  return "";
}

// 4. Generating-function link, recurrence, differential equation, and the
// involution-count coefficient forms.
std::string check_identities() {
  IdentityCheckResult gf = gf_identity_check(7);
  if (!gf.ok) return "generating-function link: " + gf.counterexample;
  for (int n = 0; n <= 20; ++n)
    if (!bessel_ode_check(n)) return fail_at(n, "differential equation fails");
  for (int n = 1; n < 20; ++n) {
    IntPolynomial lhs = bessel_poly(n + 1, PolyMethod::Explicit);
    IntPolynomial rhs = (2 * n + 1) * bessel_poly(n, PolyMethod::Explicit).shifted(1) +
                        bessel_poly(n - 1, PolyMethod::Explicit);
    if (lhs != rhs) return fail_at(n, "three-term recurrence fails");
  }
  for (int n = 0; n <= 8; ++n) {
    if (eulerian_avoid_poly(n, PolyMethod::Enumerate) !=
        eulerian_avoid_poly(n, PolyMethod::Involution))
      return fail_at(n, "eulerian-avoid involution-count form fails");
    if (bessel_poly(n, PolyMethod::Involution) != bessel_poly(n, PolyMethod::Explicit))
      return fail_at(n, "bessel involution-count form fails");
  }
  return "";
}

// 5. Each map composes with its inverse to the identity over its whole domain,
// lands in the advertised codomain, and carries its statistic across.
std::string check_bijections() {
  const auto abc = pats({"a-bc"});
  const auto acb = pats({"a-cb"});
  const auto abc_acb = pats({"a-bc", "a-cb"});
  const auto abc_abc2 = pats({"a-bc", "ab-c"});
  const auto bac = pats({"b-ac"});
  const auto abc_acb2 = pats({"a-bc", "ac-b"});
  auto avoids_all = [](const std::vector<GeneralizedPattern>& ps, const Permutation& w) {
    return avoids(std::span<const GeneralizedPattern>(ps), w);
  };

  for (int n = 0; n <= 8; ++n) {
    std::string err;
    for_each_partition(n, [&](const SetPartition& p) {
      if (!err.empty()) return;
      Permutation u = partition_to_abc_avoider(p);
      if (!avoids_all(abc, u) || abc_avoider_to_partition(u) != p)
        err = fail_at(n, "a-bc standard form fails on " + to_string(p));
      else if (count_lr_minima(u.span()) != p.block_count())
        err = fail_at(n, "block count is not the lr-minima count on " + to_string(p));
      Permutation v = partition_to_acb_avoider(p);
      if (err.empty() && (!avoids_all(acb, v) || acb_avoider_to_partition(v) != p))
        err = fail_at(n, "a-cb standard form fails on " + to_string(p));
      else if (err.empty() && n > 0 && count_descents(v.span()) + 1 != p.block_count())
        err = fail_at(n, "block count is not 1+descents on " + to_string(p));

      if (err.empty() && is_monotone(p)) {
        Permutation w = monotone_partition_to_avoider(p);
        if (!avoids_all(abc_abc2, w) || avoider_to_monotone_partition(w) != p)
          err = fail_at(n, "monotone standard form fails on " + to_string(p));
      }
      if (err.empty() && is_non_overlapping(p)) {
        SetPartition q = nop_to_monotone(p);
        if (!is_monotone(q) || monotone_to_nop(q) != p)
          err = fail_at(n, "transcription fails on " + to_string(p));
      }
      if (err.empty() && is_monotone(p)) {
        SetPartition q = monotone_to_nop(p);
        if (!is_non_overlapping(q) || nop_to_monotone(q) != p)
          err = fail_at(n, "inverse transcription fails on " + to_string(p));
      }
    });
    if (!err.empty()) return err;

    for_each_involution(n, [&](const InvolutionPerm& inv) {
      if (!err.empty()) return;
      Permutation w = involution_to_avoider(inv);
      if (!avoids_all(abc_acb, w) || avoider_to_involution(w).perm != inv.perm)
        err = fail_at(n, "involution map fails on " + to_string(inv.perm));
      else if (count_occurrences(parse_pattern("ab"), w) !=
               static_cast<long long>(inv.pairs.size()))
        err = fail_at(n, "2-cycles do not match adjacent ascents on " + to_string(inv.perm));
    });
    if (!err.empty()) return err;

    for_each_avoider(bac, n, [&](std::span<const int> w) {
      if (!err.empty()) return;
      Permutation p(std::vector<int>(w.begin(), w.end()));
      DyckPath d = perm_to_dyck(p);
      if (dyck_to_perm(d) != p)
        err = fail_at(n, "dyck map fails on " + to_string(p));
      else if (return_steps(d) != count_lr_minima(w))
        err = fail_at(n, "return steps do not match lr-minima on " + to_string(p));
    });
    if (!err.empty()) return err;
    for_each_dyck_path(n, [&](const DyckPath& d) {
      if (!err.empty()) return;
      Permutation p = dyck_to_perm(d);
      if (!avoids_all(bac, p) || perm_to_dyck(p) != d)
        err = fail_at(n, "inverse dyck map fails on " + d.steps());
    });
    if (!err.empty()) return err;

    for_each_avoider(abc_acb2, n, [&](std::span<const int> w) {
      if (!err.empty()) return;
      Permutation p(std::vector<int>(w.begin(), w.end()));
      if (motzkin_to_perm(perm_to_motzkin(p)) != p)
        err = fail_at(n, "motzkin map fails on " + to_string(p));
    });
    if (!err.empty()) return err;
    for_each_motzkin_path(n, [&](const MotzkinPath& m) {
      if (!err.empty()) return;
      Permutation p = motzkin_to_perm(m);
      if (!avoids_all(abc_acb2, p) || perm_to_motzkin(p) != m)
        err = fail_at(n, "inverse motzkin map fails on " + m.steps());
    });
    if (!err.empty()) return err;
  }
  return "";
}

// 6. Statistic distributions over the avoidance classes. Of the four extreme
// statistics over the b-ac class, right-to-left maxima provably do NOT share
// the ballot distribution (n=3: 1,3,1 against 2,2,1); they carry it over the
// mirror class of ac-b instead, and the other three do share it. This check
// verifies that corrected reading.
std::string check_distributions() {
  auto histogram = [](const std::vector<GeneralizedPattern>& ps, int n,
                      int (*stat)(std::span<const int>)) {
    std::vector<long long> h(n + 1, 0);
    for_each_avoider(ps, n, [&](std::span<const int> w) { ++h[stat(w)]; });
    return h;
  };

  for (int n = 0; n <= 8; ++n) {
    auto lr_abc = histogram(pats({"a-bc"}), n, count_lr_minima);
    auto runs_acb = histogram(pats({"a-cb"}), n, count_increasing_runs);
    for (int k = 0; k <= n; ++k) {
      if (lr_abc[k] != stirling2(n, k))
        return fail_at(n, "lr-minima over the a-bc class miss the stirling row");
      if (runs_acb[k] != stirling2(n, k))
        return fail_at(n, "increasing runs over the a-cb class miss the stirling row");
    }

    auto lr_bac = histogram(pats({"b-ac"}), n, count_lr_minima);
    for (int k = 0; k <= n; ++k)
      if (lr_bac[k] != ballot(n, k))
        return fail_at(n, "lr-minima over the b-ac class miss the ballot numbers");

    auto lr_nop = histogram(pats({"a-bc", "ab-c"}), n, count_lr_minima);
    for (int k = 0; k <= n; ++k)
      if (lr_nop[k] != s_star(n, k))
        return fail_at(n, "lr-minima over the {a-bc, ab-c} class miss the s-star row");

    if (histogram(pats({"b-ac"}), n, count_lr_maxima) != lr_bac)
      return fail_at(n, "lr-maxima differ from lr-minima over the b-ac class");
    if (histogram(pats({"b-ac"}), n, count_rl_minima) != lr_bac)
      return fail_at(n, "rl-minima differ from lr-minima over the b-ac class");
    if (histogram(pats({"ac-b"}), n, count_rl_maxima) != lr_bac)
      return fail_at(n, "rl-maxima over the ac-b class miss the ballot numbers");
  }

  // pin the reason for the corrected reading
  auto rl_max_bac = histogram(pats({"b-ac"}), 3, count_rl_maxima);
  if (rl_max_bac == std::vector<long long>{0, 2, 2, 1})
    return "rl-maxima over the b-ac class unexpectedly match the ballot row at n=3";
  return "";
}

// 7. The twelve one-dash patterns of length three fall into exactly three
// distribution classes on S_4; the one-pattern equivalence and the four-way
// dashed/dashless class equality hold for n <= 8.
std::string check_classes() {
  const std::vector<std::string> order = {
      "a-bc", "c-ba", "ab-c", "cb-a",
      "a-cb", "c-ab", "ba-c", "bc-a",
      "b-ac", "b-ca", "ac-b", "ca-b",
  };
  std::vector<GeneralizedPattern> twelve;
  for (const auto& t : order) twelve.push_back(parse_pattern(t));
  auto classes = pattern_classes(twelve, 4);
  if (classes.size() != 3)
    return "the twelve patterns form " + std::to_string(classes.size()) +
           " classes on S_4, not 3";
  for (int c = 0; c < 3; ++c) {
    if (classes[c].size() != 4) return "a distribution class has the wrong size";
    for (int i = 0; i < 4; ++i)
      if (to_string(classes[c][i]) != order[4 * c + i])
        return "class member " + to_string(classes[c][i]) + " is misplaced";
  }

  GeneralizedPattern dashed = parse_pattern("b-ac");
  GeneralizedPattern classical = parse_pattern("b-a-c");
  for (int n = 0; n <= 8; ++n) {
    std::string err;
    for_each_permutation(n, [&](std::span<const int> w) {
      if (!err.empty()) return;
      if (contains(dashed, w) != contains(classical, w))
        err = fail_at(n, "b-ac and b-a-c disagree on " +
                             to_string(Permutation(std::vector<int>(w.begin(), w.end()))));
    });
    if (!err.empty()) return err;

    std::set<std::vector<int>> first;
    for_each_avoider(pats({"a-bc", "a-cb"}), n, [&](std::span<const int> w) {
      first.insert(std::vector<int>(w.begin(), w.end()));
    });
    const std::vector<std::vector<const char*>> variants = {
        {"a-bc", "acb"}, {"abc", "a-cb"}, {"abc", "acb"}};
    for (const auto& texts : variants) {
      std::set<std::vector<int>> other;
      for_each_avoider(pats(texts), n, [&](std::span<const int> w) {
        other.insert(std::vector<int>(w.begin(), w.end()));
      });
      if (other != first) return fail_at(n, "a dashed/dashless class pair differs as a set");
    }
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* what;
    std::string (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"main table: class sizes match the printed sequences for n <= 9", check_main_table},
      {"worked examples reproduce byte-exactly", check_worked_examples},
      {"polynomial tables match and all methods agree", check_polynomial_tables},
      {"generating-function, recurrence, differential and coefficient identities hold",
       check_identities},
      {"bijections invert, land in their codomains, and carry their statistics (n <= 8)",
       check_bijections},
      {"statistic distributions match their number triangles (n <= 8; rl-maxima via the "
       "mirror class, see README)",
       check_distributions},
      {"pattern classes, one-pattern equivalence, and dashed/dashless class equalities hold",
       check_classes},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail = criteria[i].run();
    if (detail.empty()) {
      std::cout << "PASS " << i + 1 << ". " << criteria[i].what << '\n';
    } else {
      std::cout << "FAIL " << i + 1 << ". " << criteria[i].what << ": " << detail << '\n';
      ++failures;
    }
  }
  if (failures) std::cout << failures << " of 7 criteria failed\n";
  else std::cout << "all 7 criteria hold\n";
  return failures == 0 ? 0 : 1;
}
