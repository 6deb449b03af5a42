#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "csg/rational.hpp"

namespace csg {

/// Integer polynomial, coefficient index = degree, trailing coefficient
/// nonzero unless the polynomial is zero.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }
  /// t^k
  static IntPoly monomial(int k, Int coeff = 1) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(coeff);
    return IntPoly(std::move(v));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Int coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Int(0); }

  bool operator==(const IntPoly& o) const { return c == o.c; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
  }

  Int eval(const Int& x) const {
    Int v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }
  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }

  /// Coefficient-array text, e.g. "t^2-3t+2".
  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      Int a = c[k];
      if (a == 0) continue;
      std::string term;
      Int abs_a = abs(a);
      if (k == 0)
        term = abs_a.get_str();
      else {
        if (abs_a != 1) term = abs_a.get_str();
        term += var;
        if (k > 1) term += "^" + std::to_string(k);
      }
      if (s.empty())
        s = (a < 0 ? "-" : "") + term;
      else
        s += (a < 0 ? "-" : "+") + term;
    }
    return s;
  }
};

/// Product of (1 + b t) over the multiset.
inline IntPoly poly_from_linear_roots(const std::vector<int>& bs) {
  IntPoly p = IntPoly::constant(1);
  for (int b : bs) p = p * IntPoly({Int(1), Int(b)});
  return p;
}

/// Decomposes p as prod_i (1 + b_i t) with non-negative integers b_i.
/// Constant term must be 1. Returns the sorted multiset, or nullopt if p
/// does not split this way over the integers.
inline std::optional<std::vector<int>> split_into_linear(const IntPoly& p) {
  if (p.is_zero() || p.coeff(0) != 1) return std::nullopt;
  std::vector<int> out;
  IntPoly q = p;
  while (q.degree() > 0) {
    // The leading coefficient is the product of the remaining b_i, so any
    // factor's b divides it. Try ascending divisors.
    Int lead = q.c.back();
    if (lead <= 0) return std::nullopt;
    bool found = false;
    for (Int b = 1; !found && b * b <= lead; ++b) {
      if (lead % b != 0) continue;
      for (Int cand : {Int(b), Int(lead / b)}) {
        // Exact division q / (1 + cand t): coefficients satisfy
        //   q_k = r_k + cand * r_{k-1}   (r_d = 0, deg r = d-1)
        int d = q.degree();
        std::vector<Int> rc(d, Int(0));
        bool ok = (q.coeff(d) % cand == 0);
        if (ok) rc[d - 1] = q.coeff(d) / cand;
        for (int k = d - 1; ok && k >= 1; --k) {
          Int num = q.coeff(k) - rc[k];
          if (num % cand != 0) {
            ok = false;
            break;
          }
          rc[k - 1] = num / cand;
        }
        if (ok) ok = (q.coeff(0) == rc[0]);
        if (ok) {
          out.push_back(static_cast<int>(cand.get_si()));
          q = IntPoly(std::move(rc));
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  if (q.degree() != 0 || q.coeff(0) != 1) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

/// "(1+t)(1+2t)^2" style display when the polynomial splits, otherwise
/// the plain coefficient form.
inline std::string factored_str(const IntPoly& p, const std::string& var = "t") {
  auto bs = split_into_linear(p);
  if (!bs) return p.str(var);
  std::string s;
  std::size_t i = 0;
  while (i < bs->size()) {
    std::size_t j = i;
    while (j < bs->size() && (*bs)[j] == (*bs)[i]) ++j;
    int b = (*bs)[i];
    std::string base = b == 1 ? "(1+" + var + ")" : "(1+" + std::to_string(b) + var + ")";
    s += base;
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

}  // namespace csg
