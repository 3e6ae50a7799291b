#pragma once

#include "gpat/bijections.hpp"
#include "gpat/pattern.hpp"
#include "gpat/polynomial.hpp"
#include "gpat/sequences.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace gpat {

// One verified claim. The claim id is a stable anchor ("prop.bell1",
// "eq.bessel_rec", ...) used in reports and as the CLI filter key.
struct ClaimResult {
  std::string claim;
  std::string group;
  std::string summary;
  std::string n_range;
  bool passed = false;
  std::string witness;  // counterexample serialization; empty iff passed
  double elapsed_ms = 0.0;
};

struct ClaimOutcome {
  bool passed = true;
  std::string witness;
  std::string n_range;
};

struct Claim {
  std::string id;
  std::string group;  // table | distribution | bijection | polynomial | classes | lemma2
  std::string summary;
  std::function<ClaimOutcome(int n_max, int cap)> run;
};

namespace detail {

inline std::string range_to(int hi) { return "0.." + std::to_string(hi); }

inline ClaimOutcome fail(std::string witness, std::string range) {
  return {false, std::move(witness), std::move(range)};
}

inline std::vector<GeneralizedPattern> pats(std::initializer_list<const char*> texts) {
  std::vector<GeneralizedPattern> out;
  for (const char* t : texts) out.push_back(parse_pattern(t));
  return out;
}

// Distribution of a statistic over an avoidance class; index = value.
inline std::vector<long long> avoider_histogram(const std::vector<GeneralizedPattern>& ps, int n,
                                                int (*stat)(std::span<const int>), int cap) {
  std::vector<long long> h(n + 1, 0);
  for_each_avoider(ps, n, [&](std::span<const int> w) { ++h[stat(w)]; }, cap);
  return h;
}

// A counting claim: the avoidance class size matches a sequence, n = 0..n_max.
inline Claim counting_claim(std::string id, std::string class_text, std::string seq_name,
                            std::vector<const char*> patterns,
                            std::function<int128(int, int)> expected) {
  std::string summary = "|S_n(" + class_text + ")| = " + seq_name + "(n)";
  auto run = [patterns, expected, class_text, seq_name](int n_max, int cap) -> ClaimOutcome {
    std::vector<GeneralizedPattern> ps;
    for (const char* t : patterns) ps.push_back(parse_pattern(t));
    for (int n = 0; n <= n_max; ++n) {
      long long got = count_avoiders(ps, n, cap);
      int128 want = expected(n, cap);
      if (got != want)
        return fail("n=" + std::to_string(n) + ": |S_n(" + class_text + ")| = " +
                        std::to_string(got) + ", " + seq_name + " gives " + to_string(want),
                    range_to(n_max));
    }
    return {true, "", range_to(n_max)};
  };
  return {std::move(id), "table", std::move(summary), std::move(run)};
}

// A distribution claim: statistic histogram over a class matches a triangle
// row, n = 0..n_max.
inline Claim distribution_claim(std::string id, std::string summary,
                                std::vector<const char*> patterns,
                                int (*stat)(std::span<const int>),
                                std::function<int128(int, int, int)> row_value) {
  auto run = [patterns, stat, row_value](int n_max, int cap) -> ClaimOutcome {
    std::vector<GeneralizedPattern> ps;
    for (const char* t : patterns) ps.push_back(parse_pattern(t));
    for (int n = 0; n <= n_max; ++n) {
      auto h = avoider_histogram(ps, n, stat, cap);
      for (int k = 0; k <= n; ++k) {
        int128 want = row_value(n, k, cap);
        if (h[k] != want)
          return fail("n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": " +
                          std::to_string(h[k]) + " permutations, expected " + to_string(want),
                      range_to(n_max));
      }
    }
    return {true, "", range_to(n_max)};
  };
  return {std::move(id), "distribution", std::move(summary), std::move(run)};
}

inline const std::vector<GeneralizedPattern>& one_dash_length3() {
  // the twelve one-dash patterns on three letters, in class order
  static const std::vector<GeneralizedPattern> p = pats({
      "a-bc", "c-ba", "ab-c", "cb-a",   // class of a-bc
      "a-cb", "c-ab", "ba-c", "bc-a",   // class of a-cb
      "b-ac", "b-ca", "ac-b", "ca-b",   // class of b-ac
  });
  return p;
}

}  // namespace detail

inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    using detail::fail;
    using detail::range_to;
    std::vector<Claim> reg;

    // --- table: the six cardinalities -------------------------------------
    reg.push_back(detail::counting_claim(
        "prop.bell1", "a-bc", "bell", {"a-bc"}, [](int n, int) { return bell(n); }));
    reg.push_back(detail::counting_claim(
        "prop.bell2", "a-cb", "bell", {"a-cb"}, [](int n, int) { return bell(n); }));
    reg.push_back(detail::counting_claim(
        "prop.catalan", "b-ac", "catalan", {"b-ac"}, [](int n, int) { return catalan(n); }));
    reg.push_back(detail::counting_claim(
        "cor.nop", "a-bc, ab-c", "bessel_number", {"a-bc", "ab-c"},
        [](int n, int cap) { return bessel_number(n, cap); }));
    reg.push_back(detail::counting_claim(
        "prop.involutions", "a-bc, a-cb", "involutions_count", {"a-bc", "a-cb"},
        [](int n, int) { return involutions_count(n); }));
    reg.push_back(detail::counting_claim(
        "prop.motzkin", "a-bc, ac-b", "motzkin", {"a-bc", "ac-b"},
        [](int n, int) { return motzkin(n); }));

    // --- distribution: statistic refinements ------------------------------
    reg.push_back(detail::distribution_claim(
        "porism.bell1", "lr-minima over S_n(a-bc) follow the Stirling triangle", {"a-bc"},
        count_lr_minima, [](int n, int k, int) { return stirling2(n, k); }));
    reg.push_back(detail::distribution_claim(
        "porism.bell2", "increasing runs over S_n(a-cb) follow the Stirling triangle", {"a-cb"},
        count_increasing_runs, [](int n, int k, int) { return stirling2(n, k); }));
    reg.push_back(detail::distribution_claim(
        "porism.s_star", "lr-minima over S_n(a-bc, ab-c) count non-overlapping partitions by blocks",
        {"a-bc", "ab-c"}, count_lr_minima,
        [](int n, int k, int cap) { return s_star(n, k, cap); }));
    reg.push_back(detail::distribution_claim(
        "prop.ballot", "lr-minima over S_n(b-ac) follow the ballot numbers", {"b-ac"},
        count_lr_minima, [](int n, int k, int) { return ballot(n, k); }));

    // The literal four-way coincidence of these statistics over the single
    // class S_n(b-ac) is false: at n = 3 right-to-left maxima give (1,3,1)
    // against the ballot row (2,2,1). What does hold, and is checked here, is
    // that lr-minima, lr-maxima, and rl-minima coincide over S_n(b-ac), and
    // that rl-maxima carry the same distribution over the mirror class
    // S_n(ac-b) (reverse-complement carries one onto the other). The unit
    // suite pins the n = 3 counterexample so nobody "fixes" this back.
    reg.push_back({"remark.minmax", "distribution",
                   "min/max statistics share the ballot distribution (rl-maxima via the "
                   "mirror class)",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"b-ac"});
                     auto mirror = detail::pats({"ac-b"});
                     for (int n = 0; n <= n_max; ++n) {
                       auto lmin = detail::avoider_histogram(ps, n, count_lr_minima, cap);
                       auto lmax = detail::avoider_histogram(ps, n, count_lr_maxima, cap);
                       auto rmin = detail::avoider_histogram(ps, n, count_rl_minima, cap);
                       auto rmax = detail::avoider_histogram(mirror, n, count_rl_maxima, cap);
                       if (!(lmin == lmax && lmin == rmin && lmin == rmax))
                         return fail("n=" + std::to_string(n) +
                                         ": the four statistics have different distributions",
                                     range_to(n_max));
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"porism.des_fix", "distribution",
                   "descents over S_n(a-bc, a-cb) count involutions by fixed points",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"a-bc", "a-cb"});
                     for (int n = 1; n <= n_max; ++n) {
                       std::vector<long long> des_hist(n, 0);
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         ++des_hist[count_descents(w)];
                       }, cap);
                       std::vector<long long> fix_hist(n + 1, 0);
                       for_each_involution(n, [&](const InvolutionPerm& v) {
                         ++fix_hist[v.fixed.size()];
                       }, cap);
                       for (int d = 0; d < n; ++d) {
                         int f = 2 * (d + 1) - n;
                         long long want = (f >= 0 && f <= n) ? fix_hist[f] : 0;
                         if (des_hist[d] != want)
                           return fail("n=" + std::to_string(n) + ": " +
                                           std::to_string(des_hist[d]) + " avoiders with " +
                                           std::to_string(d) + " descents vs " +
                                           std::to_string(want) + " involutions with " +
                                           std::to_string(f) + " fixed points",
                                       "1.." + std::to_string(n_max));
                       }
                     }
                     return {true, "", "1.." + std::to_string(n_max)};
                   }});

    // --- bijection: roundtrips, codomains, statistic transport -------------
    reg.push_back({"bij.bell1", "bijection",
                   "partitions <-> S_n(a-bc): roundtrip, blocks = lr-minima",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"a-bc"});
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_partition(n, [&](const SetPartition& p) {
                         if (!ok) return;
                         Permutation w = partition_to_abc_avoider(p);
                         if (!avoids(std::span<const GeneralizedPattern>(ps), w) ||
                             count_lr_minima(w.span()) != p.block_count() ||
                             abc_avoider_to_partition(w) != p) {
                           ok = false;
                           bad = fail("partition " + to_string(p) + " maps to " + to_string(w),
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         if (!ok) return;
                         Permutation perm{std::vector<int>(w.begin(), w.end())};
                         if (partition_to_abc_avoider(abc_avoider_to_partition(perm)) != perm) {
                           ok = false;
                           bad = fail("avoider " + to_string(perm) + " fails the inverse roundtrip",
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"bij.bell2", "bijection",
                   "partitions <-> S_n(a-cb): roundtrip, blocks = increasing runs",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"a-cb"});
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_partition(n, [&](const SetPartition& p) {
                         if (!ok) return;
                         Permutation w = partition_to_acb_avoider(p);
                         if (!avoids(std::span<const GeneralizedPattern>(ps), w) ||
                             count_increasing_runs(w.span()) != p.block_count() ||
                             acb_avoider_to_partition(w) != p) {
                           ok = false;
                           bad = fail("partition " + to_string(p) + " maps to " + to_string(w),
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         if (!ok) return;
                         Permutation perm{std::vector<int>(w.begin(), w.end())};
                         if (partition_to_acb_avoider(acb_avoider_to_partition(perm)) != perm) {
                           ok = false;
                           bad = fail("avoider " + to_string(perm) + " fails the inverse roundtrip",
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"bij.involutions", "bijection",
                   "involutions <-> S_n(a-bc, a-cb): roundtrip, 2-cycles = (ab)-subwords",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"a-bc", "a-cb"});
                     const GeneralizedPattern ab = parse_pattern("ab");
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_involution(n, [&](const InvolutionPerm& v) {
                         if (!ok) return;
                         Permutation w = involution_to_avoider(v);
                         long long cycles = static_cast<long long>(v.pairs.size() + v.fixed.size());
                         if (!avoids(std::span<const GeneralizedPattern>(ps), w) ||
                             count_occurrences(ab, w) != static_cast<long long>(v.pairs.size()) ||
                             (n >= 1 && count_descents(w.span()) != cycles - 1) ||
                             avoider_to_involution(w).perm != v.perm) {
                           ok = false;
                           bad = fail("involution " + to_string(v.perm) + " maps to " + to_string(w),
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         if (!ok) return;
                         Permutation perm{std::vector<int>(w.begin(), w.end())};
                         if (involution_to_avoider(avoider_to_involution(perm)) != perm) {
                           ok = false;
                           bad = fail("avoider " + to_string(perm) + " fails the inverse roundtrip",
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"bij.mono", "bijection",
                   "monotone partitions <-> S_n(a-bc, ab-c): roundtrip both ways",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"a-bc", "ab-c"});
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_partition(n, [&](const SetPartition& p) {
                         if (!ok || !is_monotone(p)) return;
                         Permutation w = monotone_partition_to_avoider(p);
                         if (!avoids(std::span<const GeneralizedPattern>(ps), w) ||
                             avoider_to_monotone_partition(w) != p) {
                           ok = false;
                           bad = fail("monotone partition " + to_string(p) + " maps to " +
                                          to_string(w),
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         if (!ok) return;
                         Permutation perm{std::vector<int>(w.begin(), w.end())};
                         SetPartition p = avoider_to_monotone_partition(perm);
                         if (!is_monotone(p) || monotone_partition_to_avoider(p) != perm) {
                           ok = false;
                           bad = fail("avoider " + to_string(perm) + " fails the inverse roundtrip",
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"prop.nop-mono", "bijection",
                   "transcription maps non-overlapping <-> monotone partitions, preserving "
                   "block count and singletons",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto singletons = [](const SetPartition& p) {
                       std::vector<int> s;
                       for (const auto& b : p.blocks())
                         if (b.size() == 1) s.push_back(b.front());
                       return s;
                     };
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_partition(n, [&](const SetPartition& p) {
                         if (!ok) return;
                         if (is_non_overlapping(p)) {
                           SetPartition q = nop_to_monotone(p);
                           if (!is_monotone(q) || q.block_count() != p.block_count() ||
                               singletons(q) != singletons(p) || monotone_to_nop(q) != p) {
                             ok = false;
                             bad = fail("non-overlapping " + to_string(p) + " maps to " +
                                            to_string(q),
                                        range_to(n_max));
                           }
                         }
                         if (ok && is_monotone(p)) {
                           SetPartition q = monotone_to_nop(p);
                           if (!is_non_overlapping(q) || nop_to_monotone(q) != p) {
                             ok = false;
                             bad = fail("monotone " + to_string(p) + " maps to " + to_string(q),
                                        range_to(n_max));
                           }
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"lemma.1", "bijection",
                   "S_n(b-ac) <-> Dyck paths: roundtrip, return steps = lr-minima",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"b-ac"});
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         if (!ok) return;
                         Permutation perm{std::vector<int>(w.begin(), w.end())};
                         DyckPath path = perm_to_dyck(perm);
                         if (path.length() != 2 * n ||
                             return_steps(path) != count_lr_minima(w) ||
                             dyck_to_perm(path) != perm) {
                           ok = false;
                           bad = fail("avoider " + to_string(perm) + " maps to " + path.steps(),
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                       for_each_dyck_path(n, [&](const DyckPath& path) {
                         if (!ok) return;
                         Permutation perm = dyck_to_perm(path);
                         if (!avoids(std::span<const GeneralizedPattern>(ps), perm) ||
                             perm_to_dyck(perm) != path) {
                           ok = false;
                           bad = fail("path " + path.steps() + " fails the inverse roundtrip",
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    reg.push_back({"bij.motzkin", "bijection",
                   "S_n(a-bc, ac-b) <-> Motzkin paths: roundtrip both ways",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto ps = detail::pats({"a-bc", "ac-b"});
                     for (int n = 0; n <= n_max; ++n) {
                       ClaimOutcome bad;
                       bool ok = true;
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         if (!ok) return;
                         Permutation perm{std::vector<int>(w.begin(), w.end())};
                         MotzkinPath path = perm_to_motzkin(perm);
                         if (path.length() != n || motzkin_to_perm(path) != perm) {
                           ok = false;
                           bad = fail("avoider " + to_string(perm) + " maps to " + path.steps(),
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                       for_each_motzkin_path(n, [&](const MotzkinPath& path) {
                         if (!ok) return;
                         Permutation perm = motzkin_to_perm(path);
                         if (!avoids(std::span<const GeneralizedPattern>(ps), perm) ||
                             perm_to_motzkin(perm) != path) {
                           ok = false;
                           bad = fail("path " + path.steps() + " fails the inverse roundtrip",
                                      range_to(n_max));
                         }
                       }, cap);
                       if (!ok) return bad;
                     }
                     return {true, "", range_to(n_max)};
                   }});

    // --- polynomial: tables, methods, identities ---------------------------
    reg.push_back({"prop.euler.methods", "polynomial",
                   "the four eulerian-avoid evaluations agree (enumeration to 7, formulas to 20)",
                   [](int n_max, int cap) -> ClaimOutcome {
                     const int enum_to = std::min({n_max, 7, cap});
                     for (int n = 0; n <= 20; ++n) {
                       IntPolynomial ex = eulerian_avoid_poly(n, PolyMethod::Explicit);
                       if (eulerian_avoid_poly(n, PolyMethod::Recurrence) != ex ||
                           eulerian_avoid_poly(n, PolyMethod::Involution) != ex)
                         return fail("n=" + std::to_string(n) + ": formula methods disagree",
                                     "0..20");
                       if (n <= enum_to &&
                           eulerian_avoid_poly(n, PolyMethod::Enumerate, cap) != ex)
                         return fail("n=" + std::to_string(n) + ": enumeration gives a different "
                                     "polynomial than the explicit formula",
                                     "0..20");
                     }
                     return {true, "", "0..20 (enumeration to " + std::to_string(enum_to) + ")"};
                   }});

    reg.push_back({"prop.euler.gf", "polynomial",
                   "eulerian-avoid polynomials are generated by the Bessel family",
                   [](int, int) -> ClaimOutcome {
                     auto r = gf_identity_check(7);
                     if (!r.ok) return fail(r.counterexample, "0..7");
                     return {true, "", "0..7"};
                   }});

    reg.push_back({"eq.eulerian_poly", "polynomial",
                   "run counts over S_n(a-bc, a-cb) match involution fixed-point counts",
                   [](int n_max, int cap) -> ClaimOutcome {
                     const int hi = std::min({n_max, 8, cap});
                     auto ps = detail::pats({"a-bc", "a-cb"});
                     for (int n = 0; n <= hi; ++n) {
                       std::vector<int128> c(n + 1, 0);
                       for_each_avoider(ps, n, [&](std::span<const int> w) {
                         int runs = count_increasing_runs(w);
                         c[runs] = checked_add(c[runs], 1);
                       }, cap);
                       if (IntPolynomial(std::move(c)) !=
                           eulerian_avoid_poly(n, PolyMethod::Involution))
                         return fail("n=" + std::to_string(n) +
                                         ": enumerated distribution differs from the involution form",
                                     range_to(hi));
                     }
                     return {true, "", range_to(hi)};
                   }});

    reg.push_back({"eq.bessel_rec", "polynomial",
                   "Bessel polynomials satisfy the three-term recurrence",
                   [](int, int) -> ClaimOutcome {
                     for (int n = 1; n < 20; ++n) {
                       IntPolynomial lhs = bessel_poly(n + 1, PolyMethod::Explicit);
                       IntPolynomial rhs =
                           (2 * n + 1) * bessel_poly(n, PolyMethod::Explicit).shifted(1) +
                           bessel_poly(n - 1, PolyMethod::Explicit);
                       if (lhs != rhs)
                         return fail("n=" + std::to_string(n) + ": " + to_string(lhs) + " vs " +
                                         to_string(rhs),
                                     "0..20");
                     }
                     for (int n = 0; n <= 20; ++n)
                       if (bessel_poly(n, PolyMethod::Recurrence) !=
                           bessel_poly(n, PolyMethod::Explicit))
                         return fail("n=" + std::to_string(n) +
                                         ": recurrence evaluation differs from the explicit form",
                                     "0..20");
                     return {true, "", "0..20"};
                   }});

    reg.push_back({"eq.bessel_poly", "polynomial",
                   "Bessel coefficients count involutions by fixed points",
                   [](int, int) -> ClaimOutcome {
                     for (int n = 0; n <= 20; ++n)
                       if (bessel_poly(n, PolyMethod::Involution) !=
                           bessel_poly(n, PolyMethod::Explicit))
                         return fail("n=" + std::to_string(n) +
                                         ": involution form differs from the explicit form",
                                     "0..20");
                     return {true, "", "0..20"};
                   }});

    reg.push_back({"eq.bessel_ode", "polynomial",
                   "Bessel polynomials solve x^2 y'' + 2(x+1) y' = n(n+1) y",
                   [](int, int) -> ClaimOutcome {
                     for (int n = 0; n <= 20; ++n)
                       if (!bessel_ode_check(n))
                         return fail("n=" + std::to_string(n) + ": the differential identity fails",
                                     "0..20");
                     return {true, "", "0..20"};
                   }});

    // --- classes -----------------------------------------------------------
    reg.push_back({"prop.classes", "classes",
                   "the twelve one-dash patterns form three classes, distinct on S_4",
                   [](int n_max, int cap) -> ClaimOutcome {
                     const auto& twelve = detail::one_dash_length3();
                     auto classes4 = pattern_classes(twelve, 4, std::max(cap, 4));
                     if (classes4.size() != 3)
                       return fail("S_4 splits the patterns into " +
                                       std::to_string(classes4.size()) + " classes, not 3",
                                   "S_4");
                     for (int c = 0; c < 3; ++c)
                       for (int i = 0; i < 4; ++i)
                         if (classes4[c][i] != twelve[4 * c + i])
                           return fail("class " + std::to_string(c + 1) + " contains " +
                                           to_string(classes4[c][i]) + " instead of " +
                                           to_string(twelve[4 * c + i]),
                                       "S_4");
                     // within-class equidistribution must persist at every size
                     const int hi = std::min(n_max, 7);
                     for (int n = 0; n <= hi; ++n) {
                       auto cl = pattern_classes(twelve, n, cap);
                       // each block of four must sit inside one computed class
                       for (int c = 0; c < 3; ++c) {
                         const GeneralizedPattern& lead = twelve[4 * c];
                         auto in_same = [&](const GeneralizedPattern& p) {
                           for (const auto& group : cl) {
                             bool has_lead = false, has_p = false;
                             for (const auto& q : group) {
                               if (q == lead) has_lead = true;
                               if (q == p) has_p = true;
                             }
                             if (has_lead) return has_p;
                           }
                           return false;
                         };
                         for (int i = 1; i < 4; ++i)
                           if (!in_same(twelve[4 * c + i]))
                             return fail("n=" + std::to_string(n) + ": " +
                                             to_string(twelve[4 * c + i]) +
                                             " is not equidistributed with " + to_string(lead),
                                         "S_4 and 0.." + std::to_string(hi));
                       }
                     }
                     return {true, "", "S_4 and 0.." + std::to_string(hi)};
                   }});

    reg.push_back({"porism.dash", "classes",
                   "the dashes in {a-bc, a-cb} are immaterial: four equal avoidance sets",
                   [](int n_max, int cap) -> ClaimOutcome {
                     auto s1 = detail::pats({"a-bc", "a-cb"});
                     auto s2 = detail::pats({"a-bc", "acb"});
                     auto s3 = detail::pats({"abc", "a-cb"});
                     auto s4 = detail::pats({"abc", "acb"});
                     const int hi = std::min(n_max, 8);
                     ClaimOutcome bad;
                     bool ok = true;
                     for (int n = 0; n <= hi && ok; ++n) {
                       for_each_permutation(n, [&](std::span<const int> w) {
                         if (!ok) return;
                         bool a = avoids(std::span<const GeneralizedPattern>(s1), w);
                         if (a != avoids(std::span<const GeneralizedPattern>(s2), w) ||
                             a != avoids(std::span<const GeneralizedPattern>(s3), w) ||
                             a != avoids(std::span<const GeneralizedPattern>(s4), w)) {
                           ok = false;
                           bad = fail("permutation " +
                                          to_string(Permutation(std::vector<int>(w.begin(), w.end()))) +
                                          " separates the four sets",
                                      range_to(hi));
                         }
                       }, cap);
                     }
                     if (!ok) return bad;
                     return {true, "", range_to(hi)};
                   }});

    // --- lemma2 ------------------------------------------------------------
    reg.push_back({"lemma.2", "lemma2",
                   "a permutation avoids b-ac exactly when it avoids b-a-c",
                   [](int n_max, int cap) -> ClaimOutcome {
                     GeneralizedPattern tight = parse_pattern("b-ac");
                     GeneralizedPattern loose = parse_pattern("b-a-c");
                     ClaimOutcome bad;
                     bool ok = true;
                     for (int n = 0; n <= n_max && ok; ++n) {
                       for_each_permutation(n, [&](std::span<const int> w) {
                         if (!ok) return;
                         if (contains(tight, w) != contains(loose, w)) {
                           ok = false;
                           bad = fail("permutation " +
                                          to_string(Permutation(std::vector<int>(w.begin(), w.end()))) +
                                          " distinguishes b-ac from b-a-c",
                                      range_to(n_max));
                         }
                       }, cap);
                     }
                     if (!ok) return bad;
                     return {true, "", range_to(n_max)};
                   }});

    return reg;
  }();
  return registry;
}

// Select claims whose id contains the filter or whose group equals it;
// an empty filter selects everything. Results are ordered by claim id.
inline std::vector<ClaimResult> run_claims(const std::string& filter, int n_max,
                                           int cap = kDefaultEnumerationCap) {
  std::vector<ClaimResult> results;
  for (const Claim& c : claim_registry()) {
    if (!filter.empty() && c.group != filter &&
        c.id.find(filter) == std::string::npos)
      continue;
    ClaimResult r;
    r.claim = c.id;
    r.group = c.group;
    r.summary = c.summary;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ClaimOutcome o = c.run(n_max, cap);
      r.passed = o.passed;
      r.witness = o.witness;
      r.n_range = o.n_range;
    } catch (const std::exception& e) {
      r.passed = false;
      r.witness = std::string("exception: ") + e.what();
      r.n_range = "0.." + std::to_string(n_max);
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (!r.passed && r.witness.empty()) r.witness = "(no witness recorded)";
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.claim < b.claim; });
  return results;
}

inline bool all_passed(const std::vector<ClaimResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed) return false;
  return true;
}

inline std::vector<ClaimResult> verify_main_table(int n_max, int cap = kDefaultEnumerationCap) {
  return run_claims("table", n_max, cap);
}
inline std::vector<ClaimResult> verify_distributions(int n_max, int cap = kDefaultEnumerationCap) {
  return run_claims("distribution", n_max, cap);
}
inline std::vector<ClaimResult> verify_bijections(int n_max, int cap = kDefaultEnumerationCap) {
  return run_claims("bijection", n_max, cap);
}
inline std::vector<ClaimResult> verify_polynomials(int n_max, int cap = kDefaultEnumerationCap) {
  return run_claims("polynomial", n_max, cap);
}
inline ClaimResult verify_classes(int n, int cap = kDefaultEnumerationCap) {
  return run_claims("prop.classes", n, cap).front();
}
inline ClaimResult verify_lemma2(int n_max, int cap = kDefaultEnumerationCap) {
  return run_claims("lemma.2", n_max, cap).front();
}

}  // namespace gpat
