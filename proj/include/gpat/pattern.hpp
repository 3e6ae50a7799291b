#pragma once

#include "gpat/permutation.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpat {

// A generalized pattern: the order ranks of its letters plus, between each
// pair of neighbouring letters, a flag saying whether they must sit at
// adjacent positions in the host. In the text form a dash lifts the
// adjacency requirement: in "a-bc" the b and c must be adjacent, the a may
// sit anywhere before them.
class GeneralizedPattern {
 public:
  GeneralizedPattern(std::vector<int> ranks, std::vector<bool> adjacent)
      : ranks_(std::move(ranks)), adjacent_(std::move(adjacent)) {
    if (ranks_.empty()) throw std::invalid_argument("empty pattern");
    if (adjacent_.size() + 1 != ranks_.size())
      throw std::invalid_argument("adjacency flags must number one less than the letters");
    std::vector<bool> seen(ranks_.size(), false);
    for (int r : ranks_) {
      if (r < 1 || r > static_cast<int>(ranks_.size()))
        throw std::invalid_argument("pattern rank " + std::to_string(r) + " outside 1.." +
                                    std::to_string(ranks_.size()));
      if (seen[r - 1]) throw std::invalid_argument("repeated pattern rank " + std::to_string(r));
      seen[r - 1] = true;
    }
  }

  int length() const { return static_cast<int>(ranks_.size()); }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<bool>& adjacent() const { return adjacent_; }

  // All dashes: the classical case, no adjacency constraints at all.
  bool classical() const {
    return std::find(adjacent_.begin(), adjacent_.end(), true) == adjacent_.end();
  }
  // No dashes: the pattern must appear as a contiguous factor.
  bool contiguous() const {
    return std::find(adjacent_.begin(), adjacent_.end(), false) == adjacent_.end();
  }

  friend bool operator==(const GeneralizedPattern&, const GeneralizedPattern&) = default;

 private:
  std::vector<int> ranks_;
  std::vector<bool> adjacent_;
};

// Text form: lowercase letters whose alphabetical order gives the ranks,
// single dashes between letters. "a-bc", "ba-c", "abc", "a-b-c".
inline GeneralizedPattern parse_pattern(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern");
  if (text.front() == '-') throw std::invalid_argument("pattern begins with a dash");
  if (text.back() == '-') throw std::invalid_argument("pattern ends with a dash");
  std::vector<char> letters;
  std::vector<bool> adjacent;
  bool prev_dash = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '-') {
      if (prev_dash) throw std::invalid_argument("consecutive dashes in pattern");
      prev_dash = true;
      continue;
    }
    if (c < 'a' || c > 'z')
      throw std::invalid_argument(std::string("bad character '") + c + "' in pattern");
    for (char d : letters)
      if (d == c) throw std::invalid_argument(std::string("repeated letter '") + c + "' in pattern");
    if (!letters.empty()) adjacent.push_back(!prev_dash);
    letters.push_back(c);
    prev_dash = false;
  }
  std::vector<char> sorted(letters);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks;
  ranks.reserve(letters.size());
  for (char c : letters)
    ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                     sorted.begin()) + 1);
  return {std::move(ranks), std::move(adjacent)};
}

// Canonical text form: ranks 1,2,3.. become a,b,c.. regardless of which
// letters the pattern was parsed from.
inline std::string to_string(const GeneralizedPattern& p) {
  std::string s;
  for (int i = 0; i < p.length(); ++i) {
    if (i && !p.adjacent()[i - 1]) s.push_back('-');
    s.push_back(static_cast<char>('a' + p.ranks()[i] - 1));
  }
  return s;
}

inline GeneralizedPattern reverse(const GeneralizedPattern& p) {
  std::vector<int> ranks(p.ranks().rbegin(), p.ranks().rend());
  std::vector<bool> adjacent(p.adjacent().rbegin(), p.adjacent().rend());
  return {std::move(ranks), std::move(adjacent)};
}

inline GeneralizedPattern complement(const GeneralizedPattern& p) {
  std::vector<int> ranks;
  ranks.reserve(p.length());
  for (int r : p.ranks()) ranks.push_back(p.length() + 1 - r);
  return {std::move(ranks), p.adjacent()};
}

namespace detail {

// Maximal blocks of adjacency-true letters. The matcher places each block as
// a contiguous window in the host; dashes between blocks only require the
// blocks to appear in order (a gap of zero is allowed).
struct PatternRuns {
  std::vector<int> start;   // first pattern slot of each run (0-based)
  std::vector<int> length;  // letters in each run
};

inline PatternRuns pattern_runs(const GeneralizedPattern& p) {
  PatternRuns r;
  r.start.push_back(0);
  for (int i = 0; i + 1 < p.length(); ++i)
    if (!p.adjacent()[i]) r.start.push_back(i + 1);
  for (std::size_t j = 0; j < r.start.size(); ++j) {
    int end = j + 1 < r.start.size() ? r.start[j + 1] : p.length();
    r.length.push_back(end - r.start[j]);
  }
  return r;
}

}  // namespace detail

// Walk every occurrence of the pattern in the host, in lexicographic order
// of the (0-based) position tuple. The visitor gets the tuple as a span and
// returns false to stop the scan; scan_occurrences then also returns false.
template <class Visit>
bool scan_occurrences(const GeneralizedPattern& pat, std::span<const int> host, Visit&& visit) {
  const auto runs = detail::pattern_runs(pat);
  const int r = static_cast<int>(runs.start.size());
  const int n = static_cast<int>(host.size());
  // Minimal host space the runs from index j onward still need.
  std::vector<int> suffix(r + 1, 0);
  for (int j = r; j-- > 0;) suffix[j] = suffix[j + 1] + runs.length[j];
  std::vector<int> pos(pat.length());
  auto place = [&](auto&& self, int run, int min_start) -> bool {
    if (run == r) return visit(std::span<const int>(pos));
    const int L = runs.length[run];
    for (int s = min_start; s + suffix[run] <= n; ++s) {
      bool ok = true;
      for (int t = 0; t < L && ok; ++t) {
        const int slot = runs.start[run] + t;
        pos[slot] = s + t;
        for (int q = 0; q < slot && ok; ++q)
          if ((pat.ranks()[q] < pat.ranks()[slot]) != (host[pos[q]] < host[pos[slot]]))
            ok = false;
      }
      if (ok && !self(self, run + 1, s + L)) return false;
    }
    return true;
  };
  return place(place, 0, 0);
}

inline long long count_occurrences(const GeneralizedPattern& pat, std::span<const int> host) {
  long long n = 0;
  scan_occurrences(pat, host, [&](std::span<const int>) { ++n; return true; });
  return n;
}

inline long long count_occurrences(const GeneralizedPattern& pat, const Permutation& host) {
  return count_occurrences(pat, host.span());
}

inline bool contains(const GeneralizedPattern& pat, std::span<const int> host) {
  return !scan_occurrences(pat, host, [](std::span<const int>) { return false; });
}

inline bool avoids(std::span<const GeneralizedPattern> pats, std::span<const int> host) {
  for (const auto& p : pats)
    if (contains(p, host)) return false;
  return true;
}

inline bool avoids(std::span<const GeneralizedPattern> pats, const Permutation& host) {
  return avoids(pats, host.span());
}

// All occurrences of a pattern in a host, with 1-based position tuples.
struct OccurrenceSet {
  GeneralizedPattern pattern;
  Permutation host;
  std::vector<std::vector<int>> positions;
};

inline OccurrenceSet occurrences(const GeneralizedPattern& pat, const Permutation& host) {
  OccurrenceSet out{pat, host, {}};
  scan_occurrences(pat, host.span(), [&](std::span<const int> pos) {
    std::vector<int> t;
    t.reserve(pos.size());
    for (int p : pos) t.push_back(p + 1);
    out.positions.push_back(std::move(t));
    return true;
  });
  return out;
}

// --- avoidance classes ------------------------------------------------------

template <class Fn>
void for_each_avoider(const std::vector<GeneralizedPattern>& pats, int n, Fn&& fn,
                      int cap = kDefaultEnumerationCap) {
  for_each_permutation(n, [&](std::span<const int> w) {
    if (avoids(std::span<const GeneralizedPattern>(pats), w)) fn(w);
  }, cap);
}

inline long long count_avoiders(const std::vector<GeneralizedPattern>& pats, int n,
                                int cap = kDefaultEnumerationCap) {
  long long total = 0;
  for_each_avoider(pats, n, [&](std::span<const int>) { ++total; }, cap);
  return total;
}

// Lexicographic stream over S_n restricted to permutations avoiding every
// pattern in the list. An empty list streams all of S_n.
class AvoiderStream {
 public:
  AvoiderStream(std::vector<GeneralizedPattern> pats, int n, int cap = kDefaultEnumerationCap)
      : pats_(std::move(pats)), inner_(n, cap) {}

  std::optional<Permutation> next() {
    while (auto p = inner_.next())
      if (avoids(std::span<const GeneralizedPattern>(pats_), *p)) return p;
    return std::nullopt;
  }

 private:
  std::vector<GeneralizedPattern> pats_;
  PermutationStream inner_;
};

// Group patterns by the multiset of their occurrence counts over all of S_n.
// Patterns in the same group are indistinguishable by that distribution;
// groups keep input order and are ordered by first member.
inline std::vector<std::vector<GeneralizedPattern>> pattern_classes(
    const std::vector<GeneralizedPattern>& pats, int n, int cap = kDefaultEnumerationCap) {
  std::vector<std::vector<long long>> sig(pats.size());
  for_each_permutation(n, [&](std::span<const int> w) {
    for (std::size_t i = 0; i < pats.size(); ++i)
      sig[i].push_back(count_occurrences(pats[i], w));
  }, cap);
  for (auto& s : sig) std::sort(s.begin(), s.end());
  std::vector<std::vector<GeneralizedPattern>> classes;
  std::vector<std::size_t> rep;
  for (std::size_t i = 0; i < pats.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c)
      if (sig[rep[c]] == sig[i]) {
        classes[c].push_back(pats[i]);
        placed = true;
      }
    if (!placed) {
      classes.push_back({pats[i]});
      rep.push_back(i);
    }
  }
  return classes;
}

}  // namespace gpat
