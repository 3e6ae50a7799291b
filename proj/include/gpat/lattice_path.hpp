#pragma once

#include "gpat/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gpat {

namespace detail {

inline void validate_path(std::string_view steps, bool allow_level) {
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    char c = steps[i];
    if (c == 'u') ++h;
    else if (c == 'd') --h;
    else if (!(allow_level && c == 'l'))
      throw std::invalid_argument(std::string("bad step character '") + c + "' in path");
    if (h < 0)
      throw std::invalid_argument("path dips below the axis at step " + std::to_string(i + 1));
  }
  if (h != 0) throw std::invalid_argument("path does not return to the axis");
}

}  // namespace detail

// A Dyck path: a word over {u, d} that never dips below the axis and ends on
// it. The empty path is valid.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
    detail::validate_path(steps_, /*allow_level=*/false);
  }

  const std::string& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

// A Motzkin path adds level steps 'l' to the Dyck alphabet.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  explicit MotzkinPath(std::string steps) : steps_(std::move(steps)) {
    detail::validate_path(steps_, /*allow_level=*/true);
  }

  const std::string& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::string steps_;
};

// Steps that touch the axis coming down.
inline int return_steps(const DyckPath& p) {
  int h = 0, returns = 0;
  for (char c : p.steps()) {
    h += c == 'u' ? 1 : -1;
    if (c == 'd' && h == 0) ++returns;
  }
  return returns;
}

// Split off the leading arch: p = u.first d.second where first is the part
// strictly above the axis. Errors on the empty path.
inline std::pair<DyckPath, DyckPath> first_return_decomposition(const DyckPath& p) {
  if (p.empty()) throw std::domain_error("first return of the empty path");
  int h = 0;
  for (std::size_t i = 0; i < p.steps().size(); ++i) {
    h += p.steps()[i] == 'u' ? 1 : -1;
    if (h == 0)
      return {DyckPath(p.steps().substr(1, i - 1)), DyckPath(p.steps().substr(i + 1))};
  }
  throw std::logic_error("validated path had no return");  // unreachable
}

namespace detail {

// Lexicographic successor machinery shared by the two path streams.
// Feasibility of putting letter c at a position: the height stays >= 0 and
// the remaining positions can still close the path (for Dyck the remainder
// must also have the height's parity).
inline bool step_feasible(char c, int height_before, int remaining_after, bool dyck) {
  int h = height_before + (c == 'u' ? 1 : c == 'd' ? -1 : 0);
  if (h < 0 || h > remaining_after) return false;
  if (dyck && (remaining_after - h) % 2 != 0) return false;
  return true;
}

inline const char* alphabet(bool dyck) { return dyck ? "du" : "dlu"; }

// Fill steps[from..] with the lexicographically smallest feasible suffix.
inline void fill_minimal(std::string& steps, std::size_t from, int height, bool dyck) {
  for (std::size_t i = from; i < steps.size(); ++i) {
    int remaining = static_cast<int>(steps.size() - i) - 1;
    for (const char* c = alphabet(dyck); *c; ++c)
      if (step_feasible(*c, height, remaining, dyck)) {
        steps[i] = *c;
        height += *c == 'u' ? 1 : *c == 'd' ? -1 : 0;
        break;
      }
  }
}

// Advance to the next path in lexicographic order; false when exhausted.
inline bool advance_path(std::string& steps, bool dyck) {
  std::vector<int> height_before(steps.size());
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height_before[i] = h;
    h += steps[i] == 'u' ? 1 : steps[i] == 'd' ? -1 : 0;
  }
  for (std::size_t i = steps.size(); i-- > 0;) {
    int remaining = static_cast<int>(steps.size() - i) - 1;
    const char* alpha = alphabet(dyck);
    for (const char* c = alpha; *c; ++c) {
      if (*c <= steps[i]) continue;
      if (!step_feasible(*c, height_before[i], remaining, dyck)) continue;
      steps[i] = *c;
      int new_h = height_before[i] + (*c == 'u' ? 1 : *c == 'd' ? -1 : 0);
      fill_minimal(steps, i + 1, new_h, dyck);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Streams the Dyck paths with m up-steps (length 2m) in lexicographic order
// ('d' < 'u', so "udud" comes before "uudd").
class DyckPathStream {
 public:
  explicit DyckPathStream(int m, int cap = kDefaultEnumerationCap) : steps_(2 * m, 'u') {
    check_enumeration_cap(m, cap);
    detail::fill_minimal(steps_, 0, 0, /*dyck=*/true);
  }

  std::optional<DyckPath> next() {
    if (done_) return std::nullopt;
    DyckPath out{std::string(steps_)};
    done_ = !detail::advance_path(steps_, /*dyck=*/true);
    return out;
  }

 private:
  std::string steps_;
  bool done_ = false;
};

// Streams the Motzkin paths of length n in lexicographic order
// ('d' < 'l' < 'u').
class MotzkinPathStream {
 public:
  explicit MotzkinPathStream(int n, int cap = kDefaultEnumerationCap) : steps_(n, 'u') {
    check_enumeration_cap(n, cap);
    detail::fill_minimal(steps_, 0, 0, /*dyck=*/false);
  }

  std::optional<MotzkinPath> next() {
    if (done_) return std::nullopt;
    MotzkinPath out{std::string(steps_)};
    done_ = !detail::advance_path(steps_, /*dyck=*/false);
    return out;
  }

 private:
  std::string steps_;
  bool done_ = false;
};

template <class Fn>
void for_each_dyck_path(int m, Fn&& fn, int cap = kDefaultEnumerationCap) {
  DyckPathStream stream(m, cap);
  while (auto p = stream.next()) fn(*p);
}

template <class Fn>
void for_each_motzkin_path(int n, Fn&& fn, int cap = kDefaultEnumerationCap) {
  MotzkinPathStream stream(n, cap);
  while (auto p = stream.next()) fn(*p);
}

}  // namespace gpat
