#ifndef CURV_CONFIG_HPP
#define CURV_CONFIG_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "curv/matrix.hpp"
#include "curv/rational.hpp"

namespace curv {

// Subset of {1..N} as a bit mask; bit i-1 encodes membership of index i.
// N is capped at 64, which covers every configuration the enumerative
// engines can realistically process.
using Mask = std::uint64_t;

constexpr std::size_t kMaxVectors = 64;

inline Mask bit(std::size_t index0) { return Mask(1) << index0; }
inline bool contains(Mask m, std::size_t index0) { return (m >> index0) & 1; }
inline std::size_t popcount(Mask m) { return std::popcount(m); }

inline std::vector<std::size_t> mask_to_indices(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Lexicographic order on subsets read as ascending index sequences,
/// so {} < {1} < {1,2} < {1,3} < {2}.
bool mask_lex_less(Mask a, Mask b);

/// An ordered multiset of N rational vectors in an n-dimensional ambient
/// space. List position fixes the linear order v_1 < ... < v_N used by
/// external activity. Duplicates and zero vectors are legal.
struct VectorConfiguration {
  std::size_t ambient_dim = 0;
  std::vector<Vec> vectors;

  VectorConfiguration() = default;
  VectorConfiguration(std::size_t dim, std::vector<Vec> vecs);

  std::size_t size() const { return vectors.size(); }

  Matrix submatrix(Mask s) const;  // columns = selected vectors
  std::size_t rank() const;
  bool spans() const { return rank() == ambient_dim; }

  VectorConfiguration permuted(const std::vector<std::size_t>& perm) const;
};

}  // namespace curv

#endif
