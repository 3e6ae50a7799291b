#pragma once

#include "gpat/int128.hpp"
#include "gpat/set_partition.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gpat {

inline int128 binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int128 r = 1;
  for (int i = 1; i <= k; ++i)
    r = exact_div(checked_mul(r, n - k + i), i);  // product of i consecutives divides by i!
  return r;
}

inline int128 factorial(int n) {
  int128 r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

// Bell numbers by the binomial recursion B_{n+1} = sum_k C(n,k) B_k.
inline int128 bell(int n) {
  if (n < 0) throw std::invalid_argument("bell of negative n");
  std::vector<int128> b{1};
  for (int m = 0; m < n; ++m) {
    int128 next = 0;
    for (int k = 0; k <= m; ++k) next = checked_add(next, checked_mul(binomial(m, k), b[k]));
    b.push_back(next);
  }
  return b[n];
}

// Stirling numbers of the second kind: partitions of [n] into k blocks.
inline int128 stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2 of negative argument");
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here
  if (k == 0) return 0;
  std::vector<int128> row{1};  // row for n' = 0, entries k' = 0..
  for (int m = 1; m <= n; ++m) {
    std::vector<int128> next(std::min(m, k) + 1, 0);
    for (int j = 1; j < static_cast<int>(next.size()); ++j) {
      int128 above = j < static_cast<int>(row.size()) ? row[j] : 0;
      int128 diag = j - 1 < static_cast<int>(row.size()) ? row[j - 1] : 0;
      next[j] = checked_add(checked_mul(j, above), diag);
    }
    row = std::move(next);
  }
  return k < static_cast<int>(row.size()) ? row[k] : 0;
}

inline int128 catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of negative n");
  return exact_div(binomial(2 * n, n), n + 1);
}

// Motzkin numbers: M_{n+1} = M_n + sum_k M_k M_{n-1-k}.
inline int128 motzkin(int n) {
  if (n < 0) throw std::invalid_argument("motzkin of negative n");
  std::vector<int128> m{1};
  for (int i = 0; i < n; ++i) {
    int128 next = m[i];
    for (int k = 0; k <= i - 1; ++k)
      next = checked_add(next, checked_mul(m[k], m[i - 1 - k]));
    m.push_back(next);
  }
  return m[n];
}

// Involutions of [n]: I_{n+1} = I_n + n I_{n-1} (the new element is fixed or
// pairs with one of the n others).
inline int128 involutions_count(int n) {
  if (n < 0) throw std::invalid_argument("involutions_count of negative n");
  int128 prev = 1, cur = 1;  // I_0, I_1
  if (n == 0) return 1;
  for (int m = 2; m <= n; ++m) {
    int128 next = checked_add(cur, checked_mul(m - 1, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

// Involutions of [n] with exactly f fixed points. Zero unless f has n's
// parity and 0 <= f <= n. Recursion on the fate of element n:
// fixed -> (n-1, f-1); paired with one of n-1 others -> (n-2, f).
inline int128 involutions_by_fixed(int n, int f) {
  if (n < 0 || f < 0) throw std::invalid_argument("involutions_by_fixed of negative argument");
  if (f > n || (n - f) % 2 != 0) return 0;
  // rows up to n; row m holds counts for every viable f'
  std::vector<std::vector<int128>> rows(n + 1);
  for (int m = 0; m <= n; ++m) {
    rows[m].assign(m + 1, 0);
    for (int g = m % 2; g <= m; g += 2) {
      if (m == 0) { rows[m][g] = 1; continue; }
      int128 v = g >= 1 ? rows[m - 1][g - 1] : 0;
      if (m >= 2 && g <= m - 2) v = checked_add(v, checked_mul(m - 1, rows[m - 2][g]));
      rows[m][g] = v;
    }
  }
  return rows[n][f];
}

// Non-overlapping partition counts, by enumeration and filtering.
inline int128 bessel_number(int n, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(n, cap);
  int128 total = 0;
  for_each_partition(n, [&](const SetPartition& p) {
    if (is_non_overlapping(p)) total = checked_add(total, 1);
  }, cap);
  return total;
}

inline int128 s_star(int n, int k, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(n, cap);
  if (k < 0) return 0;
  int128 total = 0;
  for_each_partition(n, [&](const SetPartition& p) {
    if (p.block_count() == k && is_non_overlapping(p)) total = checked_add(total, 1);
  }, cap);
  return total;
}

// Ballot numbers k/(2n-k) * C(2n-k, n): permutations of [n] avoiding b-ac
// with exactly k left-to-right minima. The formula is integral; exact_div
// would throw if it were not.
inline int128 ballot(int n, int k) {
  if (n < 0) throw std::invalid_argument("ballot of negative n");
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 1 || k > n) return 0;
  return exact_div(checked_mul(k, binomial(2 * n - k, n)), 2 * n - k);
}

// A named sequence or triangle evaluated up to n_max, for the CLI and the
// report writers. Triangles also carry their row sums in values.
struct SequenceTable {
  std::string name;
  std::vector<int128> values;
  std::vector<std::vector<int128>> triangle;  // empty for plain sequences
};

inline SequenceTable build_sequence(const std::string& name, int n_max,
                                    int cap = kDefaultEnumerationCap) {
  if (n_max < 0) throw std::invalid_argument("sequence bound must be non-negative");
  SequenceTable t{name, {}, {}};
  auto plain = [&](auto&& f) {
    for (int n = 0; n <= n_max; ++n) t.values.push_back(f(n));
  };
  auto triangular = [&](auto&& f) {
    for (int n = 0; n <= n_max; ++n) {
      std::vector<int128> row;
      int128 sum = 0;
      for (int k = 0; k <= n; ++k) {
        row.push_back(f(n, k));
        sum = checked_add(sum, row.back());
      }
      t.triangle.push_back(std::move(row));
      t.values.push_back(sum);
    }
  };
  if (name == "bell") plain([](int n) { return bell(n); });
  else if (name == "catalan") plain([](int n) { return catalan(n); });
  else if (name == "motzkin") plain([](int n) { return motzkin(n); });
  else if (name == "involutions") plain([](int n) { return involutions_count(n); });
  else if (name == "bessel") plain([&](int n) { return bessel_number(n, cap); });
  else if (name == "stirling") triangular([](int n, int k) { return stirling2(n, k); });
  else if (name == "s-star") triangular([&](int n, int k) { return s_star(n, k, cap); });
  else if (name == "ballot") triangular([](int n, int k) { return ballot(n, k); });
  else if (name == "involutions-by-fixed")
    triangular([](int n, int k) { return involutions_by_fixed(n, k); });
  else
    throw std::invalid_argument("unknown sequence name \"" + name + "\"");
  return t;
}

}  // namespace gpat
