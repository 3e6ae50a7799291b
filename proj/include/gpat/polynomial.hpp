#pragma once

#include "gpat/int128.hpp"
#include "gpat/pattern.hpp"
#include "gpat/sequences.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gpat {

// A polynomial in one variable with exact integer coefficients, stored
// lowest degree first with trailing zeros trimmed. The zero polynomial has
// no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<int128> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(int128 coefficient, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial of negative degree");
    std::vector<int128> c(degree + 1, 0);
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  int128 coeff(int d) const {
    return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : 0;
  }
  const std::vector<int128>& coefficients() const { return c_; }

  IntPolynomial derivative() const {
    std::vector<int128> d;
    for (int i = 1; i < static_cast<int>(c_.size()); ++i)
      d.push_back(checked_mul(c_[i], i));
    return IntPolynomial(std::move(d));
  }

  // Multiply by x^power.
  IntPolynomial shifted(int power) const {
    if (is_zero()) return {};
    std::vector<int128> c(c_.size() + power, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + power] = c_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<int128> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeff(i), b.coeff(i));
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<int128> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a.coeff(i), b.coeff(i));
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<int128> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(int128 s, const IntPolynomial& a) {
    std::vector<int128> c(a.c_);
    for (auto& x : c) x = checked_mul(x, s);
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<int128> c_;
};

// Human-readable form, ascending by degree: "3x^2 + 6x^3 + x^4"; "0" for the
// zero polynomial. Coefficient 1 is left implicit except on the constant.
inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = 0; d <= p.degree(); ++d) {
    int128 c = p.coeff(d);
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    int128 mag = c < 0 ? -c : c;
    if (mag != 1 || d == 0) s += to_string(mag);
    if (d >= 1) s += "x";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

enum class PolyMethod { Enumerate, Recurrence, Explicit, Involution };

inline PolyMethod parse_poly_method(const std::string& name) {
  if (name == "enumerate") return PolyMethod::Enumerate;
  if (name == "recurrence") return PolyMethod::Recurrence;
  if (name == "explicit") return PolyMethod::Explicit;
  if (name == "involution") return PolyMethod::Involution;
  throw std::invalid_argument("unknown polynomial method \"" + name + "\"");
}

inline int128 pow2(int k) {
  if (k < 0 || k > 126) throw std::domain_error("2^" + std::to_string(k) + " out of range");
  return static_cast<int128>(1) << k;
}

// Descent polynomial of the {a-bc, a-cb} avoidance class: the sum of
// x^(number of increasing runs) over S_n(a-bc, a-cb). That exponent is
// 1 + descents except on the empty permutation, which contributes 1
// (matching the closed forms below).
//
// Four routes to the same polynomial:
//   enumerate  - filter S_n and tally runs (needs n within the cap)
//   recurrence - A_{n+2} = x(1 + x + 2x d/dx) A_n from A_0 = 1, A_1 = x
//   explicit   - sum_k C(n,k) C(n-k,k) k!/2^k x^(n-k)
//   involution - sum_k I_n(2k-n) x^k, counting involutions by fixed points
inline IntPolynomial eulerian_avoid_poly(int n, PolyMethod method,
                                         int cap = kDefaultEnumerationCap) {
  if (n < 0) throw std::invalid_argument("eulerian_avoid_poly of negative n");
  switch (method) {
    case PolyMethod::Enumerate: {
      check_enumeration_cap(n, cap);
      std::vector<int128> c(n + 1, 0);
      const std::vector<GeneralizedPattern> pats{parse_pattern("a-bc"), parse_pattern("a-cb")};
      for_each_avoider(pats, n, [&](std::span<const int> w) {
        int runs = count_increasing_runs(w);
        c[runs] = checked_add(c[runs], 1);
      }, cap);
      return IntPolynomial(std::move(c));
    }
    case PolyMethod::Recurrence: {
      IntPolynomial even{std::vector<int128>{1}};        // A_0 = 1
      IntPolynomial odd = IntPolynomial::monomial(1, 1); // A_1 = x
      IntPolynomial& a = n % 2 == 0 ? even : odd;
      for (int m = n % 2; m + 2 <= n; m += 2)
        a = a.shifted(1) + a.shifted(2) + 2 * a.derivative().shifted(2);
      return a;
    }
    case PolyMethod::Explicit: {
      std::vector<int128> c(n + 1, 0);
      for (int k = 0; 2 * k <= n; ++k) {
        int128 term = checked_mul(checked_mul(binomial(n, k), binomial(n - k, k)), factorial(k));
        c[n - k] = exact_div(term, pow2(k));  // the product is divisible by 2^k
      }
      return IntPolynomial(std::move(c));
    }
    case PolyMethod::Involution: {
      std::vector<int128> c(n + 1, 0);
      for (int k = 0; k <= n; ++k)
        if (2 * k - n >= 0) c[k] = involutions_by_fixed(n, 2 * k - n);
      return IntPolynomial(std::move(c));
    }
  }
  throw std::logic_error("unhandled polynomial method");
}

// Bessel polynomials y_n. Same value from three routes:
//   explicit   - sum_k C(n+k,k) C(n,k) k!/2^k x^k
//   recurrence - y_{n+1} = (2n+1) x y_n + y_{n-1} from y_0 = 1, y_1 = 1 + x
//   involution - sum_k I_{n+k}(n-k) x^k
inline IntPolynomial bessel_poly(int n, PolyMethod method) {
  if (n < 0) throw std::invalid_argument("bessel_poly of negative n");
  switch (method) {
    case PolyMethod::Explicit: {
      std::vector<int128> c(n + 1, 0);
      for (int k = 0; k <= n; ++k) {
        int128 term = checked_mul(checked_mul(binomial(n + k, k), binomial(n, k)), factorial(k));
        c[k] = exact_div(term, pow2(k));
      }
      return IntPolynomial(std::move(c));
    }
    case PolyMethod::Recurrence: {
      IntPolynomial prev{std::vector<int128>{1}};           // y_0
      IntPolynomial cur{std::vector<int128>{1, 1}};         // y_1
      if (n == 0) return prev;
      for (int m = 1; m < n; ++m) {
        IntPolynomial next = (2 * m + 1) * cur.shifted(1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    case PolyMethod::Involution: {
      std::vector<int128> c(n + 1, 0);
      for (int k = 0; k <= n; ++k) c[k] = involutions_by_fixed(n + k, n - k);
      return IntPolynomial(std::move(c));
    }
    case PolyMethod::Enumerate:
      throw std::invalid_argument("bessel polynomials have no enumerative method");
  }
  throw std::logic_error("unhandled polynomial method");
}

// Cross-check of the generating-function link between the two families:
// for every m <= M, A_m(t) = sum_j (coefficient of x^(m-j) in y_j) t^j.
struct IdentityCheckResult {
  bool ok = true;
  std::string counterexample;  // empty when ok
};

inline IdentityCheckResult gf_identity_check(int max_m) {
  for (int m = 0; m <= max_m; ++m) {
    IntPolynomial lhs = eulerian_avoid_poly(m, PolyMethod::Explicit);
    std::vector<int128> c(m + 1, 0);
    for (int j = 0; j <= m; ++j) c[j] = bessel_poly(j, PolyMethod::Explicit).coeff(m - j);
    IntPolynomial rhs{std::move(c)};
    if (lhs != rhs)
      return {false, "m=" + std::to_string(m) + ": " + to_string(lhs) + " vs " + to_string(rhs)};
  }
  return {};
}

// The Bessel polynomials satisfy x^2 y'' + 2(x+1) y' = n(n+1) y, checked as
// exact polynomial equality.
inline bool bessel_ode_check(int n) {
  IntPolynomial y = bessel_poly(n, PolyMethod::Explicit);
  IntPolynomial d1 = y.derivative();
  IntPolynomial lhs = d1.derivative().shifted(2) + 2 * (d1.shifted(1) + d1);
  IntPolynomial rhs = checked_mul(n, n + 1) * y;
  return lhs == rhs;
}

}  // namespace gpat
