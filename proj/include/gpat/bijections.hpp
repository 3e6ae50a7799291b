#pragma once

#include "gpat/involution.hpp"
#include "gpat/lattice_path.hpp"
#include "gpat/pattern.hpp"
#include "gpat/permutation.hpp"
#include "gpat/set_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpat {

namespace detail {

inline const std::vector<GeneralizedPattern>& patterns_abc() {
  static const std::vector<GeneralizedPattern> p{parse_pattern("a-bc")};
  return p;
}
inline const std::vector<GeneralizedPattern>& patterns_acb() {
  static const std::vector<GeneralizedPattern> p{parse_pattern("a-cb")};
  return p;
}
inline const std::vector<GeneralizedPattern>& patterns_abc_acb() {
  static const std::vector<GeneralizedPattern> p{parse_pattern("a-bc"), parse_pattern("a-cb")};
  return p;
}
inline const std::vector<GeneralizedPattern>& patterns_abc_abc2() {
  static const std::vector<GeneralizedPattern> p{parse_pattern("a-bc"), parse_pattern("ab-c")};
  return p;
}
inline const std::vector<GeneralizedPattern>& patterns_bac() {
  static const std::vector<GeneralizedPattern> p{parse_pattern("b-ac")};
  return p;
}
inline const std::vector<GeneralizedPattern>& patterns_abc_acb2() {
  static const std::vector<GeneralizedPattern> p{parse_pattern("a-bc"), parse_pattern("ac-b")};
  return p;
}

inline void require_avoids(const std::vector<GeneralizedPattern>& pats, const Permutation& w,
                           const char* what) {
  if (!avoids(std::span<const GeneralizedPattern>(pats), w))
    throw std::domain_error(std::string("input permutation does not avoid ") + what);
}

}  // namespace detail

// --- set partitions <-> pattern avoiders -------------------------------------
//
// Standard forms of a partition: list the blocks by decreasing minima. Writing
// each block with its least element first and the rest decreasing gives a
// permutation avoiding a-bc; writing each block increasing gives one avoiding
// a-cb. Block minima become the left-to-right minima (resp. the starts of the
// increasing runs), which is what makes the maps invertible.

inline Permutation partition_to_abc_avoider(const SetPartition& p) {
  std::vector<int> w;
  w.reserve(p.ground_size());
  for (auto it = p.blocks().rbegin(); it != p.blocks().rend(); ++it) {
    w.push_back(it->front());
    for (std::size_t i = it->size(); i-- > 1;) w.push_back((*it)[i]);
  }
  return Permutation(std::move(w));
}

inline SetPartition abc_avoider_to_partition(const Permutation& w) {
  detail::require_avoids(detail::patterns_abc(), w, "a-bc");
  std::vector<std::vector<int>> blocks;
  int best = INT32_MAX;
  for (int x : w.word()) {
    if (x < best) {
      best = x;
      blocks.emplace_back();
    }
    blocks.back().push_back(x);
  }
  return {w.size(), std::move(blocks)};
}

inline Permutation partition_to_acb_avoider(const SetPartition& p) {
  std::vector<int> w;
  w.reserve(p.ground_size());
  for (auto it = p.blocks().rbegin(); it != p.blocks().rend(); ++it)
    for (int x : *it) w.push_back(x);
  return Permutation(std::move(w));
}

inline SetPartition acb_avoider_to_partition(const Permutation& w) {
  detail::require_avoids(detail::patterns_acb(), w, "a-cb");
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < w.size(); ++i) {
    if (i == 0 || w.word()[i] < w.word()[i - 1]) blocks.emplace_back();
    blocks.back().push_back(w.word()[i]);
  }
  return {w.size(), std::move(blocks)};
}

// --- involutions <-> {a-bc, a-cb} avoiders -----------------------------------
//
// List the cycles by decreasing least element, each 2-cycle with its smaller
// element first. 2-cycles land as the adjacent ascents of the image, so the
// inverse reads pairs off greedily.

inline Permutation involution_to_avoider(const InvolutionPerm& inv) {
  std::vector<std::pair<int, int>> cycles;  // (least element, partner or 0)
  for (int f : inv.fixed) cycles.emplace_back(f, 0);
  for (auto [i, j] : inv.pairs) cycles.emplace_back(i, j);
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<int> w;
  w.reserve(inv.perm.size());
  for (auto [least, partner] : cycles) {
    w.push_back(least);
    if (partner) w.push_back(partner);
  }
  return Permutation(std::move(w));
}

inline Permutation involution_to_avoider(const Permutation& p) {
  return involution_to_avoider(make_involution(p));
}

inline InvolutionPerm avoider_to_involution(const Permutation& w) {
  detail::require_avoids(detail::patterns_abc_acb(), w, "a-bc and a-cb");
  std::vector<int> map(w.size(), 0);
  int i = 0;
  while (i < w.size()) {
    if (i + 1 < w.size() && w.word()[i] < w.word()[i + 1]) {
      map[w.word()[i] - 1] = w.word()[i + 1];
      map[w.word()[i + 1] - 1] = w.word()[i];
      i += 2;
    } else {
      map[w.word()[i] - 1] = w.word()[i];
      i += 1;
    }
  }
  return make_involution(Permutation(std::move(map)));
}

// --- monotone partitions <-> {a-bc, ab-c} avoiders ---------------------------
//
// On monotone partitions the a-bc standard form also avoids ab-c, and the
// a-bc inverse lands back on a monotone partition.

inline Permutation monotone_partition_to_avoider(const SetPartition& p) {
  if (!is_monotone(p)) throw std::domain_error("input partition is not monotone");
  return partition_to_abc_avoider(p);
}

inline SetPartition avoider_to_monotone_partition(const Permutation& w) {
  detail::require_avoids(detail::patterns_abc_abc2(), w, "a-bc and ab-c");
  std::vector<std::vector<int>> blocks;
  int best = INT32_MAX;
  for (int x : w.word()) {
    if (x < best) {
      best = x;
      blocks.emplace_back();
    }
    blocks.back().push_back(x);
  }
  return {w.size(), std::move(blocks)};
}

// --- non-overlapping <-> monotone partitions ---------------------------------
//
// Transcription map: walk k = 1..n and rebuild a partition step by step.
// k opens a block in the input -> open a fresh block in the output.
// k closes a block -> close the open output block with the smallest minimum
// (inverse direction: the largest). k sits strictly inside the i-th largest
// open input block (ranked by descending minimum) -> append k to the i-th
// largest open output block. Singletons copy over. Opens and closes mirror
// each other, so both sides always hold equally many open blocks.

namespace detail {

inline SetPartition transcribe_partition(const SetPartition& p, bool close_smallest) {
  const int n = p.ground_size();
  std::vector<int> block_of(n + 1, -1);
  for (std::size_t b = 0; b < p.blocks().size(); ++b)
    for (int x : p.blocks()[b]) block_of[x] = static_cast<int>(b);

  std::vector<std::vector<int>> out;
  std::vector<int> open_out;  // indices into out, kept sorted by minimum (ascending)

  for (int k = 1; k <= n; ++k) {
    const auto& blk = p.blocks()[block_of[k]];
    if (blk.size() == 1) {
      out.push_back({k});
      continue;
    }
    if (k == blk.front()) {
      out.push_back({k});
      open_out.push_back(static_cast<int>(out.size()) - 1);  // largest minimum so far
      continue;
    }
    // Open input blocks at time k: started before k, not finished before k.
    std::vector<int> open_in_minima;
    for (const auto& b : p.blocks())
      if (b.front() < k && k <= b.back()) open_in_minima.push_back(b.front());
    std::sort(open_in_minima.begin(), open_in_minima.end());
    if (open_in_minima.size() != open_out.size())
      throw std::logic_error("open block counts diverged during transcription");

    if (k == blk.back()) {
      std::size_t pick = close_smallest ? 0 : open_out.size() - 1;
      out[open_out[pick]].push_back(k);
      open_out.erase(open_out.begin() + static_cast<std::ptrdiff_t>(pick));
    } else {
      // rank of k's own block among the open input blocks, largest minimum first
      auto it = std::find(open_in_minima.begin(), open_in_minima.end(), blk.front());
      std::size_t rank_from_top = open_in_minima.end() - it;  // 1 = largest
      out[open_out[open_out.size() - rank_from_top]].push_back(k);
    }
  }
  return {n, std::move(out)};
}

}  // namespace detail

inline SetPartition nop_to_monotone(const SetPartition& p) {
  if (!is_non_overlapping(p)) throw std::domain_error("input partition has overlapping blocks");
  return detail::transcribe_partition(p, /*close_smallest=*/true);
}

inline SetPartition monotone_to_nop(const SetPartition& p) {
  if (!is_monotone(p)) throw std::domain_error("input partition is not monotone");
  return detail::transcribe_partition(p, /*close_smallest=*/false);
}

// --- b-ac avoiders <-> Dyck paths --------------------------------------------
//
// First-return recursion. Around its minimum, pi = sigma 1 tau with every
// letter of sigma above every letter of tau (else a b-ac occurrence crosses
// the split), and pi maps to u D(tau) d D(sigma). Left-to-right minima of pi
// become the return steps of the image.

inline DyckPath perm_to_dyck(const Permutation& p) {
  detail::require_avoids(detail::patterns_bac(), p, "b-ac");
  struct Task {
    char emit = 0;  // nonzero: literal step to append
    std::vector<int> word;
  };
  std::string out;
  std::vector<Task> work;
  work.push_back({0, p.word()});
  while (!work.empty()) {
    Task t = std::move(work.back());
    work.pop_back();
    if (t.emit) {
      out.push_back(t.emit);
      continue;
    }
    if (t.word.empty()) continue;
    auto min_it = std::min_element(t.word.begin(), t.word.end());
    std::span<const int> whole(t.word);
    auto sigma = whole.first(static_cast<std::size_t>(min_it - t.word.begin()));
    auto tau = whole.subspan(static_cast<std::size_t>(min_it - t.word.begin()) + 1);
    work.push_back({0, projection(sigma).word()});
    work.push_back({'d', {}});
    work.push_back({0, projection(tau).word()});
    work.push_back({'u', {}});
  }
  return DyckPath(std::move(out));
}

inline Permutation dyck_to_perm(const DyckPath& path) {
  if (path.empty()) return {};
  const std::string& s = path.steps();
  struct Node {
    int alpha = -1, beta = -1;
  };
  struct Range {
    int begin, end, parent, slot;  // slot: 0 fills alpha, 1 fills beta
  };
  std::vector<Node> nodes;
  std::vector<Range> work{{0, path.length(), -1, 0}};
  while (!work.empty()) {
    Range r = work.back();
    work.pop_back();
    if (r.begin >= r.end) continue;
    int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    if (r.parent >= 0) (r.slot ? nodes[r.parent].beta : nodes[r.parent].alpha) = id;
    int h = 0, ret = r.begin;
    for (int i = r.begin; i < r.end; ++i) {
      h += s[i] == 'u' ? 1 : -1;
      if (h == 0) { ret = i; break; }
    }
    work.push_back({r.begin + 1, ret, id, 0});
    work.push_back({ret + 1, r.end, id, 1});
  }
  // Children were created after their parents, so a reverse sweep sees both
  // factors finished. u alpha d beta unmaps to sigma 1 tau with tau = alpha's
  // word shifted to {2..} and sigma = beta's word shifted to the top letters.
  std::vector<std::vector<int>> words(nodes.size());
  static const std::vector<int> kEmpty;
  for (std::size_t id = nodes.size(); id-- > 0;) {
    const auto& a = nodes[id].alpha >= 0 ? words[nodes[id].alpha] : kEmpty;
    const auto& b = nodes[id].beta >= 0 ? words[nodes[id].beta] : kEmpty;
    const int n = static_cast<int>(a.size() + b.size()) + 1;
    std::vector<int> w;
    w.reserve(n);
    for (int x : b) w.push_back(x + n - static_cast<int>(b.size()));
    w.push_back(1);
    for (int x : a) w.push_back(x + 1);
    words[id] = std::move(w);
  }
  return Permutation(std::move(words[0]));
}

// --- {a-bc, ac-b} avoiders <-> Motzkin paths ---------------------------------
//
// Recursion on the maximum. Either pi = n sigma (image: l M(sigma)) or
// pi = sigma r n tau where r sits just left of n; avoidance forces tau to be
// exactly {1..|tau|} and r to top it off, so pi maps to u M(sigma') d M(tau)
// with sigma' the projection of sigma.

inline MotzkinPath perm_to_motzkin(const Permutation& p) {
  detail::require_avoids(detail::patterns_abc_acb2(), p, "a-bc and ac-b");
  struct Task {
    char emit = 0;
    std::vector<int> word;  // always a permutation of {1..word.size()}
  };
  std::string out;
  std::vector<Task> work;
  work.push_back({0, p.word()});
  while (!work.empty()) {
    Task t = std::move(work.back());
    work.pop_back();
    if (t.emit) {
      out.push_back(t.emit);
      continue;
    }
    if (t.word.empty()) continue;
    const int n = static_cast<int>(t.word.size());
    auto max_it = std::find(t.word.begin(), t.word.end(), n);
    if (max_it == t.word.begin()) {
      // validates that the remainder is a permutation of {1..n-1}
      Permutation rest{std::vector<int>(t.word.begin() + 1, t.word.end())};
      work.push_back({0, rest.word()});
      work.push_back({'l', {}});
      continue;
    }
    std::span<const int> whole(t.word);
    const std::size_t k = static_cast<std::size_t>(max_it - t.word.begin());  // 0-based index of n
    auto sigma = whole.first(k - 1);
    // avoidance pins the suffix to exactly {1..|tau|}; the constructor checks
    Permutation tau{std::vector<int>(t.word.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                     t.word.end())};
    work.push_back({0, tau.word()});
    work.push_back({'d', {}});
    work.push_back({0, projection(sigma).word()});
    work.push_back({'u', {}});
  }
  return MotzkinPath(std::move(out));
}

inline Permutation motzkin_to_perm(const MotzkinPath& path) {
  if (path.empty()) return {};
  const std::string& s = path.steps();
  struct Node {
    bool level = false;
    int alpha = -1, beta = -1;  // level nodes use alpha as their only child
  };
  struct Range {
    int begin, end, parent, slot;
  };
  std::vector<Node> nodes;
  std::vector<Range> work{{0, path.length(), -1, 0}};
  while (!work.empty()) {
    Range r = work.back();
    work.pop_back();
    if (r.begin >= r.end) continue;
    int id = static_cast<int>(nodes.size());
    nodes.push_back({});
    if (r.parent >= 0) (r.slot ? nodes[r.parent].beta : nodes[r.parent].alpha) = id;
    if (s[r.begin] == 'l') {
      nodes[id].level = true;
      work.push_back({r.begin + 1, r.end, id, 0});
    } else {
      int h = 0, ret = r.begin;
      for (int i = r.begin; i < r.end; ++i) {
        h += s[i] == 'u' ? 1 : s[i] == 'd' ? -1 : 0;
        if (h == 0) { ret = i; break; }
      }
      work.push_back({r.begin + 1, ret, id, 0});
      work.push_back({ret + 1, r.end, id, 1});
    }
  }
  std::vector<std::vector<int>> words(nodes.size());
  static const std::vector<int> kEmpty;
  for (std::size_t id = nodes.size(); id-- > 0;) {
    const auto& a = nodes[id].alpha >= 0 ? words[nodes[id].alpha] : kEmpty;
    if (nodes[id].level) {
      std::vector<int> w;
      w.reserve(a.size() + 1);
      w.push_back(static_cast<int>(a.size()) + 1);
      w.insert(w.end(), a.begin(), a.end());
      words[id] = std::move(w);
      continue;
    }
    const auto& b = nodes[id].beta >= 0 ? words[nodes[id].beta] : kEmpty;
    const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    const int n = la + lb + 2;
    std::vector<int> w;
    w.reserve(n);
    for (int x : a) w.push_back(x + lb + 1);  // sigma occupies {lb+2 .. n-1}
    w.push_back(lb + 1);                      // r
    w.push_back(n);
    w.insert(w.end(), b.begin(), b.end());    // tau stays {1..lb}
    words[id] = std::move(w);
  }
  return Permutation(std::move(words[0]));
}

}  // namespace gpat
