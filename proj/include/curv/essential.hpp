#ifndef CURV_ESSENTIAL_HPP
#define CURV_ESSENTIAL_HPP

#include <vector>

#include "curv/config.hpp"
#include "curv/matroid.hpp"
#include "curv/polynomial.hpp"
#include "curv/squarefree.hpp"

namespace curv {

/// A hyperplane of E spanned by the configuration vectors lying on it.
/// normal is scaled so its first nonzero coordinate is 1; index_set lists
/// the vectors off the hyperplane.
struct EssentialHyperplane {
  Mask index_set = 0;
  Vec normal;
  std::size_t d = 0;  // |index_set|
};

/// A pure power of a linear form, one per essential hyperplane.
struct IdealGenerator {
  Vec linear_form;
  unsigned power = 1;
};

/// Complete duplicate-free list sorted by canonical normal. Throws
/// std::invalid_argument (with the actual rank) if cfg does not span.
std::vector<EssentialHyperplane> essential_hyperplanes(
    const VectorConfiguration& cfg);

std::vector<IdealGenerator> ideal_generators(const VectorConfiguration& cfg);

/// Checks that every λ_H^{d(H)+1} maps to zero in Φ_N.
bool generators_vanish(const VectorConfiguration& cfg);

/// True iff f evaluates to zero under x_i -> θ_i.
bool vanishing_membership(const VectorConfiguration& cfg, const Polynomial& f);

/// Hilbert function of Sym(E*) / <λ_H^{d(H)+1}> up to max_degree, per-degree
/// linear algebra on the generator multiples.
GradedCount quotient_hilbert(const VectorConfiguration& cfg,
                             std::size_t max_degree,
                             std::size_t row_limit = kDefaultRowLimit);

/// Recomputes the essential hyperplanes of cfg from those of the deletion and
/// the contraction and compares against direct enumeration, d-values
/// included.
bool essential_deletion_contraction_check(const VectorConfiguration& cfg);

/// Verifies, for this f, that membership in the vanishing ideal of V is
/// equivalent to membership of f and ∂f/∂x_n in the vanishing ideal of V',
/// in the adapted coordinates where the last vector becomes e_n.
bool derivative_membership_check(const VectorConfiguration& cfg,
                                 const Polynomial& f);

/// Cross-checks the direct essential index subsets against their two
/// equivalent characterizations (coordinate-plane intersections with P, and
/// cycles of {φ_1..φ_N, θ_1..θ_n}).
bool remark1_crosscheck(const VectorConfiguration& cfg);

/// The essential index subsets by direct enumeration (sorted lex).
std::vector<Mask> essential_index_subsets(const VectorConfiguration& cfg);

}  // namespace curv

#endif
