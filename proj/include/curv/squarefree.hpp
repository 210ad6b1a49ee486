#ifndef CURV_SQUAREFREE_HPP
#define CURV_SQUAREFREE_HPP

#include <map>

#include "curv/config.hpp"
#include "curv/matroid.hpp"
#include "curv/polynomial.hpp"

namespace curv {

/// Element of Φ_N: the commutative algebra on φ_1..φ_N with φ_i² = 0.
/// Sparse map from square-free monomials (bit masks) to coefficients;
/// zero coefficients are never stored.
class SquareFreeElement {
 public:
  SquareFreeElement() = default;

  static SquareFreeElement unit();
  static SquareFreeElement generator(std::size_t index0);  // φ_{index0+1}

  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  Rational coefficient(Mask m) const;

  void add_term(Mask m, const Rational& c);

  SquareFreeElement operator+(const SquareFreeElement& o) const;
  SquareFreeElement operator*(const SquareFreeElement& o) const;
  SquareFreeElement scaled(const Rational& c) const;
  SquareFreeElement pow(unsigned k) const;

  bool operator==(const SquareFreeElement&) const = default;

 private:
  std::map<Mask, Rational> terms_;
};

/// The generators θ_i = Σ_j v_j[i] φ_j attached to a configuration.
struct GeneratorSet {
  std::vector<SquareFreeElement> thetas;
};

GeneratorSet generators_from(const VectorConfiguration& cfg);

/// Substitute x_i -> θ_i and expand in Φ_N.
SquareFreeElement evaluate(const Polynomial& f, const GeneratorSet& gens);

constexpr std::size_t kDefaultRowLimit = 2'000'000;

/// A_k: rows = k-subsets I of {1..N} (lex), columns = degree-k monomials J in
/// x_1..x_n (lex); entry (I,J) = coefficient of φ_I in θ_{j1}···θ_{jk}.
Matrix coefficient_matrix(const VectorConfiguration& cfg, unsigned k,
                          std::size_t row_limit = kDefaultRowLimit);

/// dim C_V^k = rank A_k for k = 0..N. The parallel path fans the per-degree
/// ranks out over OpenMP threads; the serial path is the reference.
GradedCount algebra_graded_dims(const VectorConfiguration& cfg,
                                std::size_t row_limit = kDefaultRowLimit);
GradedCount algebra_graded_dims_serial(
    const VectorConfiguration& cfg, std::size_t row_limit = kDefaultRowLimit);

/// dim S_V^k, via the expansion of the square-free monomials m(S) in the
/// degree-k monomial basis of Sym(E). Equal to algebra_graded_dims by the
/// transpose identity; computed independently.
GradedCount dual_graded_dims(const VectorConfiguration& cfg,
                             std::size_t row_limit = kDefaultRowLimit);

/// True iff {m(S) : S robust} is linearly independent in Sym(E) and has
/// cardinality ind(V).
bool robust_basis_check(const VectorConfiguration& cfg);

}  // namespace curv

#endif
