#ifndef CURV_POLYNOMIAL_HPP
#define CURV_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "curv/rational.hpp"

namespace curv {

using Exponents = std::vector<unsigned>;

/// Sparse polynomial in x_1..x_n over Q, stored as exponent-vector ->
/// coefficient with no zero coefficients retained.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// Sum of coeffs[i] * x_{i+1}.
  static Polynomial linear_form(const Vec& coeffs);
  static Polynomial monomial(std::size_t nvars, const Exponents& e,
                             const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// All exponent vectors of total degree d in n variables, in the
/// lexicographic order of the monomial sequences j_1 <= ... <= j_d.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d);

}  // namespace curv

#endif
