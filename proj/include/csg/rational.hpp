#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 40
  };
};

}  // namespace Eigen

namespace csg {

using Rat = mpq_class;
using Int = mpz_class;

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

/// Scales a rational row vector to its primitive integer form: integer
/// entries with content 1 and positive first nonzero entry. The zero
/// vector is returned unchanged.
inline RowVec primitive(const RowVec& v) {
  Int den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Int d = v(i).get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  RowVec w = v * Rat(den_lcm);
  Int content = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    Int num = w(i).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  if (content == 0) return w;  // zero vector
  w /= Rat(content);
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) != 0) {
      if (w(i) < 0) w = -w;
      break;
    }
  }
  return w;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const RowVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).get_str();
  }
  return s + ")";
}

/// Pretty form of a primitive-integer linear form, e.g. "x1+x3" or
/// "2x0+x1+x2". Variable names are x<base>..x<base+n-1>.
inline std::string form_string(const RowVec& v, int index_base = 1) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rat& c = v(i);
    if (c == 0) continue;
    std::string var = "x" + std::to_string(index_base + static_cast<int>(i));
    if (s.empty()) {
      if (c == 1)
        s += var;
      else if (c == -1)
        s += "-" + var;
      else
        s += c.get_str() + var;
    } else {
      if (c == 1)
        s += "+" + var;
      else if (c == -1)
        s += "-" + var;
      else if (c > 0)
        s += "+" + c.get_str() + var;
      else
        s += c.get_str() + var;
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace csg
