#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpat {

// Exhaustive enumeration (permutations, partitions, paths...) refuses to run
// past this size unless the caller raises the cap explicitly. 12 keeps the
// worst offender (n! = 479M) out of reach while everything the verification
// suite needs (n <= 9) stays cheap.
inline constexpr int kDefaultEnumerationCap = 12;

inline void check_enumeration_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  if (n > cap)
    throw std::domain_error("enumeration of size " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(cap));
}

// A permutation of {1..n} in one-line notation. Validated on construction;
// immutable afterwards. The empty permutation (n = 0) is a first-class value.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int x : word_) {
      if (x < 1 || x > static_cast<int>(word_.size()))
        throw std::invalid_argument("letter " + std::to_string(x) +
                                    " outside 1.." + std::to_string(word_.size()));
      if (seen[x - 1])
        throw std::invalid_argument("repeated letter " + std::to_string(x));
      seen[x - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  // 1-based: letter(i) is the i-th letter of the one-line word.
  int letter(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }
  std::span<const int> span() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Serialization: a digit string for n <= 9 ("847296153"), comma-separated
// otherwise ("10,13,11,9,..."). parse accepts both forms.
inline std::string to_string(const Permutation& p) {
  if (p.size() <= 9) {
    std::string s;
    for (int x : p.word()) s.push_back(static_cast<char>('0' + x));
    return s;
  }
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(p.word()[i]);
  }
  return s;
}

inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      if (tok.empty())
        throw std::invalid_argument("empty entry in permutation \"" + std::string(text) + "\"");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw std::invalid_argument(std::string("bad character '") + c + "' in permutation");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw std::invalid_argument("permutation letter too large");
      }
      w.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("bad character '") + c + "' in permutation");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

inline Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

inline Permutation complement(const Permutation& p) {
  std::vector<int> w;
  w.reserve(p.size());
  for (int x : p.word()) w.push_back(p.size() + 1 - x);
  return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> w(p.size());
  for (int i = 1; i <= p.size(); ++i) w[p.letter(i) - 1] = i;
  return Permutation(std::move(w));
}

// Order-preserving relabeling of a word of distinct integers onto {1..k}:
// the i-th output letter is the rank of the i-th input letter.
inline Permutation projection(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw std::invalid_argument("projection: repeated value " + std::to_string(sorted[i]));
  std::vector<int> w;
  w.reserve(word.size());
  for (int x : word) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    w.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(w));
}

// --- permutation statistics -------------------------------------------------
//
// These run on raw spans so avoidance scans don't have to materialize
// Permutation objects. Positions are 1-based. A left-to-right minimum is a
// letter strictly smaller than everything before it; the first letter always
// qualifies (dually for the other three).

inline int count_descents(std::span<const int> w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++d;
  return d;
}

// Number of maximal increasing runs: 0 for the empty word, descents + 1 else.
inline int count_increasing_runs(std::span<const int> w) {
  return w.empty() ? 0 : count_descents(w) + 1;
}

inline std::vector<int> lr_minima_positions(std::span<const int> w) {
  std::vector<int> pos;
  int best = INT32_MAX;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < best) { best = w[i]; pos.push_back(static_cast<int>(i) + 1); }
  return pos;
}

inline std::vector<int> lr_maxima_positions(std::span<const int> w) {
  std::vector<int> pos;
  int best = INT32_MIN;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > best) { best = w[i]; pos.push_back(static_cast<int>(i) + 1); }
  return pos;
}

inline std::vector<int> rl_minima_positions(std::span<const int> w) {
  std::vector<int> pos;
  int best = INT32_MAX;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] < best) { best = w[i]; pos.push_back(static_cast<int>(i) + 1); }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

inline std::vector<int> rl_maxima_positions(std::span<const int> w) {
  std::vector<int> pos;
  int best = INT32_MIN;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] > best) { best = w[i]; pos.push_back(static_cast<int>(i) + 1); }
  std::reverse(pos.begin(), pos.end());
  return pos;
}

inline int count_lr_minima(std::span<const int> w) {
  int n = 0, best = INT32_MAX;
  for (int x : w)
    if (x < best) { best = x; ++n; }
  return n;
}

inline int count_lr_maxima(std::span<const int> w) {
  int n = 0, best = INT32_MIN;
  for (int x : w)
    if (x > best) { best = x; ++n; }
  return n;
}

inline int count_rl_minima(std::span<const int> w) {
  int n = 0, best = INT32_MAX;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] < best) { best = w[i]; ++n; }
  return n;
}

inline int count_rl_maxima(std::span<const int> w) {
  int n = 0, best = INT32_MIN;
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] > best) { best = w[i]; ++n; }
  return n;
}

struct StatisticProfile {
  int descents = 0;
  std::vector<int> lr_minima;  // 1-based positions, left to right
  std::vector<int> lr_maxima;
  std::vector<int> rl_minima;
  std::vector<int> rl_maxima;
};

inline StatisticProfile statistics(const Permutation& p) {
  StatisticProfile s;
  s.descents = count_descents(p.span());
  s.lr_minima = lr_minima_positions(p.span());
  s.lr_maxima = lr_maxima_positions(p.span());
  s.rl_minima = rl_minima_positions(p.span());
  s.rl_maxima = rl_maxima_positions(p.span());
  return s;
}

// --- enumeration ------------------------------------------------------------

// Lexicographic stream over S_n. Pull with next() until it returns nullopt.
class PermutationStream {
 public:
  explicit PermutationStream(int n, int cap = kDefaultEnumerationCap) : word_(n) {
    check_enumeration_cap(n, cap);
    std::iota(word_.begin(), word_.end(), 1);
  }

  std::optional<Permutation> next() {
    if (done_) return std::nullopt;
    Permutation out{std::vector<int>(word_)};
    done_ = !std::next_permutation(word_.begin(), word_.end());
    return out;
  }

 private:
  std::vector<int> word_;
  bool done_ = false;
};

// Span-based loop for hot paths (no per-item allocation beyond the buffer).
template <class Fn>
void for_each_permutation(int n, Fn&& fn, int cap = kDefaultEnumerationCap) {
  check_enumeration_cap(n, cap);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(std::span<const int>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace gpat
