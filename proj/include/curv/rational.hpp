#ifndef CURV_RATIONAL_HPP
#define CURV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace curv {

// Arbitrary-precision rational scalar. mpq_class keeps the canonical form we
// need (positive denominator, gcd-reduced) as long as every value goes
// through canonicalize(); the helpers below never bypass that.
using Rational = mpq_class;
using Integer = mpz_class;

using Vec = std::vector<Rational>;

inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  q.canonicalize();
  if (q.get_den() <= 0)
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Total order on rational vectors, coordinate-wise lexicographic.
inline int compare_vec(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    return compare_vec(a, b) < 0;
  }
};

// Scale so the first nonzero coordinate becomes 1; identity on the zero
// vector. Canonical representative of the line through v.
inline Vec canonical_line(Vec v) {
  for (const auto& x : v) {
    if (x != 0) {
      Rational pivot = x;
      for (auto& y : v) y /= pivot;
      break;
    }
  }
  return v;
}

}  // namespace curv

#endif
