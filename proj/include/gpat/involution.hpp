#pragma once

#include "gpat/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpat {

// An involution (self-inverse permutation) seen through its cycle structure:
// 2-cycles as (i, j) pairs with i < j, ascending by i, plus fixed points.
struct InvolutionPerm {
  Permutation perm;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> fixed;
};

inline InvolutionPerm make_involution(const Permutation& p) {
  InvolutionPerm inv{p, {}, {}};
  for (int i = 1; i <= p.size(); ++i) {
    int j = p.letter(i);
    if (p.letter(j) != i)
      throw std::domain_error("not an involution: applying it twice moves " + std::to_string(i));
    if (j == i) inv.fixed.push_back(i);
    else if (i < j) inv.pairs.emplace_back(i, j);
  }
  return inv;
}

inline bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p.letter(p.letter(i)) != i) return false;
  return true;
}

// Streams the involutions of {1..n} by pairing recursion: repeatedly decide
// the fate of the largest unassigned element (fixed point first, then each
// smaller partner in ascending order). Far cheaper than filtering S_n.
class InvolutionStream {
 public:
  explicit InvolutionStream(int n, int cap = kDefaultEnumerationCap) {
    check_enumeration_cap(n, cap);
    std::vector<int> map(n, 0);
    generate(map, n);
  }

  std::optional<InvolutionPerm> next() {
    if (at_ >= items_.size()) return std::nullopt;
    return make_involution(Permutation(items_[at_++]));
  }

 private:
  void generate(std::vector<int>& map, int n) {
    int m = n;
    while (m >= 1 && map[m - 1] != 0) --m;
    if (m == 0) {
      items_.push_back(map);
      return;
    }
    map[m - 1] = m;  // m stays fixed
    generate(map, n);
    map[m - 1] = 0;
    for (int s = 1; s < m; ++s) {
      if (map[s - 1] != 0) continue;
      map[s - 1] = m;
      map[m - 1] = s;
      generate(map, n);
      map[s - 1] = map[m - 1] = 0;
    }
  }

  std::vector<std::vector<int>> items_;
  std::size_t at_ = 0;
};

template <class Fn>
void for_each_involution(int n, Fn&& fn, int cap = kDefaultEnumerationCap) {
  InvolutionStream stream(n, cap);
  while (auto inv = stream.next()) fn(*inv);
}

}  // namespace gpat
