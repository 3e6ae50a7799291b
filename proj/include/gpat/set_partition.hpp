#pragma once

#include "gpat/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpat {

// A partition of {1..n} into nonempty blocks. Canonical form throughout:
// elements ascending inside each block, blocks ordered by their minima.
// n = 0 is the empty partition with no blocks.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) throw std::invalid_argument("partition of a negative set");
    std::vector<bool> seen(n_, false);
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("empty block in partition");
      std::sort(b.begin(), b.end());
      for (int x : b) {
        if (x < 1 || x > n_)
          throw std::invalid_argument("element " + std::to_string(x) + " outside 1.." +
                                      std::to_string(n_));
        if (seen[x - 1])
          throw std::invalid_argument("element " + std::to_string(x) + " in two blocks");
        seen[x - 1] = true;
      }
    }
    for (int x = 1; x <= n_; ++x)
      if (!seen[x - 1])
        throw std::invalid_argument("element " + std::to_string(x) + " missing from partition");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// Text form: blocks joined by '/', elements by ','. "1,2,5/3,8/4,6,7" means
// {{1,2,5},{3,8},{4,6,7}}. The empty string is the empty partition.
inline std::string to_string(const SetPartition& p) {
  std::string s;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b) s.push_back('/');
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(block[i]);
    }
  }
  return s;
}

inline SetPartition parse_set_partition(std::string_view text) {
  if (text.empty()) return {};
  std::vector<std::vector<int>> blocks;
  int max_elem = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t slash = text.find('/', pos);
    std::string_view blk =
        text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    std::vector<int> block;
    std::size_t bpos = 0;
    while (bpos <= blk.size()) {
      std::size_t comma = blk.find(',', bpos);
      std::string_view tok =
          blk.substr(bpos, comma == std::string_view::npos ? std::string_view::npos : comma - bpos);
      if (tok.empty())
        throw std::invalid_argument("empty element in partition \"" + std::string(text) + "\"");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw std::invalid_argument(std::string("bad character '") + c + "' in partition");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw std::invalid_argument("partition element too large");
      }
      block.push_back(v);
      max_elem = std::max(max_elem, v);
      if (comma == std::string_view::npos) break;
      bpos = comma + 1;
    }
    blocks.push_back(std::move(block));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return {max_elem, std::move(blocks)};
}

// Blocks A and B overlap when they interleave halfway:
// min A < min B < max A < max B. A partition is non-overlapping
// when no two of its blocks do this.
inline bool is_non_overlapping(const SetPartition& p) {
  const auto& bl = p.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = i + 1; j < bl.size(); ++j) {
      // canonical order gives min(bl[i]) < min(bl[j])
      if (bl[i].front() < bl[j].front() && bl[j].front() < bl[i].back() &&
          bl[i].back() < bl[j].back())
        return false;
    }
  return true;
}

// Monotone: listing the non-singleton blocks by decreasing minimum, their
// maxima also decrease strictly. Singletons are ignored.
inline bool is_monotone(const SetPartition& p) {
  int prev_max = -1;  // walking minima increasing, maxima must increase too
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) continue;
    if (b.back() <= prev_max) return false;
    prev_max = b.back();
  }
  return true;
}

// Streams partitions of {1..n} via restricted-growth strings: a[i] is the
// (0-based) block of element i+1, a[0] = 0, a[i] <= 1 + max(prefix).
// Lexicographic on the growth string; O(n) state even though there are
// Bell(n) items.
class PartitionStream {
 public:
  explicit PartitionStream(int n, int cap = kDefaultEnumerationCap) : n_(n), rgs_(n, 0) {
    check_enumeration_cap(n, cap);
  }

  std::optional<SetPartition> next() {
    if (done_) return std::nullopt;
    SetPartition out = build();
    advance();
    return out;
  }

 private:
  SetPartition build() const {
    int k = 0;
    for (int v : rgs_) k = std::max(k, v + 1);
    std::vector<std::vector<int>> blocks(k);
    for (int i = 0; i < n_; ++i) blocks[rgs_[i]].push_back(i + 1);
    return {n_, std::move(blocks)};
  }

  void advance() {
    if (n_ == 0) { done_ = true; return; }
    for (int i = n_ - 1; i >= 1; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs_[j]);
      if (rgs_[i] <= prefix_max) {
        ++rgs_[i];
        for (int j = i + 1; j < n_; ++j) rgs_[j] = 0;
        return;
      }
    }
    done_ = true;
  }

  int n_;
  std::vector<int> rgs_;
  bool done_ = false;
};

template <class Fn>
void for_each_partition(int n, Fn&& fn, int cap = kDefaultEnumerationCap) {
  PartitionStream stream(n, cap);
  while (auto p = stream.next()) fn(*p);
}

}  // namespace gpat
