#ifndef CURV_MATROID_HPP
#define CURV_MATROID_HPP

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "curv/config.hpp"

namespace curv {

/// Minimal dependent subset with its canonical linear dependence: the
/// coefficients follow the ascending index order of the support and the
/// first one equals 1.
struct Circuit {
  Mask support = 0;
  std::vector<Rational> dependence;
};

/// Counts per degree k = 0..N; for the matroid engine counts[k] is the
/// number of independent S with k = N - |S| - act(S).
struct GradedCount {
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  bool operator==(const GradedCount&) const = default;
};

/// Combinatorial engine over one configuration. Circuits are enumerated once
/// (as a side product of the pruned independent-subset search) and indexed by
/// minimal element for activity queries. Immutable after the lazy caches
/// fill; the enumeration entry points are safe to call concurrently only
/// after circuits() has been forced.
class Matroid {
 public:
  explicit Matroid(VectorConfiguration cfg);

  const VectorConfiguration& config() const { return cfg_; }
  std::size_t num_vectors() const { return cfg_.size(); }
  std::size_t rank() const { return rank_; }
  Mask full_mask() const { return full_; }

  bool is_independent(Mask s) const;

  /// All circuits, lexicographic by support.
  const std::vector<Circuit>& circuits() const;

  /// act(S): defined for independent S only, throws otherwise.
  std::size_t external_activity(Mask s) const;

  /// Externally active vectors of an independent S, as a mask.
  Mask externally_active_set(Mask s) const;

  std::uint64_t independent_count() const;
  GradedCount graded_counts() const;

  // Serial reference paths for the two enumeration kernels; identical
  // results, no OpenMP.
  std::uint64_t independent_count_serial() const;
  GradedCount graded_counts_serial() const;

  /// All robust subsets, lexicographic.
  std::vector<Mask> robust_subsets() const;
  bool is_robust(Mask s) const;

  /// Independent S -> complement of the antirobust set S ∪ M; a bijection
  /// onto the robust subsets.
  Mask nbc_bijection(Mask s) const;

 private:
  void ensure_circuits() const;
  template <class Visit>
  void enumerate_from(std::size_t first, EchelonState& st, Mask s,
                      Visit&& visit, bool collect) const;

  VectorConfiguration cfg_;
  Mask full_;
  std::size_t rank_;
  mutable bool circuits_ready_ = false;
  mutable std::vector<Circuit> circuits_;
  mutable std::unordered_set<Mask> circuit_supports_;
  mutable std::vector<std::vector<const Circuit*>> by_min_;
};

/// (V', V''): drop the last vector / project the rest along it into explicit
/// coordinates for the quotient space. Throws if the last vector is zero.
std::pair<VectorConfiguration, VectorConfiguration> delete_contract(
    const VectorConfiguration& cfg);

/// Pivot coordinate used by delete_contract's quotient chart (first nonzero
/// coordinate of the last vector).
std::size_t contraction_pivot(const VectorConfiguration& cfg);

}  // namespace curv

#endif
