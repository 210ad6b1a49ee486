#ifndef CURV_TESTS_ORACLES_HPP
#define CURV_TESTS_ORACLES_HPP

// Independent brute-force oracles used to freeze expected values. They share
// no code with the engine paths they check: rank is a plain Gauss-Jordan
// over rationals, activity comes straight from the definition, and the
// subset walk covers all 2^N subsets without pruning.

#include <cstdint>
#include <random>
#include <vector>

#include "curv/config.hpp"

namespace curv::testing {

inline std::size_t oracle_rank(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t oracle_rank_of(const VectorConfiguration& cfg, Mask s) {
  std::vector<Vec> rows;
  for (auto i : mask_to_indices(s)) rows.push_back(cfg.vectors[i]);
  return oracle_rank(std::move(rows));
}

inline bool oracle_independent(const VectorConfiguration& cfg, Mask s) {
  return oracle_rank_of(cfg, s) == popcount(s);
}

// act(S) from the definition: v is externally active iff some subset
// C ⊆ S ∪ {v} is a cycle (minimal dependent) with minimal element v.
inline std::size_t oracle_activity(const VectorConfiguration& cfg, Mask s) {
  std::size_t act = 0;
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    if (contains(s, v)) continue;
    Mask pool = s & ~(bit(v + 1) - 1);  // members of S above v
    bool active = false;
    // every cycle with minimal element v is {v} ∪ (subset of S above v)
    std::vector<std::size_t> above = mask_to_indices(pool);
    for (Mask pick = 0; pick < (Mask(1) << above.size()) && !active; ++pick) {
      Mask c = bit(v);
      for (std::size_t k = 0; k < above.size(); ++k)
        if (contains(pick, k)) c |= bit(above[k]);
      if (oracle_independent(cfg, c)) continue;
      bool minimal = true;
      for (auto i : mask_to_indices(c)) {
        if (oracle_independent(cfg, c & ~bit(i))) continue;
        minimal = false;
        break;
      }
      if (minimal) active = true;
    }
    if (active) ++act;
  }
  return act;
}

struct OracleGraded {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;
};

inline OracleGraded oracle_graded(const VectorConfiguration& cfg) {
  const std::size_t n = cfg.size();
  OracleGraded out;
  out.counts.assign(n + 1, 0);
  Mask full = n == 64 ? ~Mask(0) : (bit(n) - 1);
  for (Mask s = 0;; ++s) {
    if (oracle_independent(cfg, s)) {
      out.total += 1;
      out.counts[n - popcount(s) - oracle_activity(cfg, s)] += 1;
    }
    if (s == full) break;
  }
  return out;
}

inline VectorConfiguration random_spanning_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dim_pick(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    std::size_t n = dim_pick(rng);
    std::uniform_int_distribution<std::size_t> count_pick(n, 8);
    std::size_t count = count_pick(rng);
    std::vector<Vec> vectors(count, Vec(n));
    for (auto& v : vectors)
      for (auto& x : v) x = entry(rng);
    VectorConfiguration cfg(n, std::move(vectors));
    // nonzero last vector keeps deletion/contraction checks applicable
    if (cfg.spans() && !is_zero(cfg.vectors.back())) return cfg;
  }
}

}  // namespace curv::testing

#endif
