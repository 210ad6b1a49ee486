#ifndef CURV_ROOTSYS_HPP
#define CURV_ROOTSYS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "curv/config.hpp"
#include "curv/essential.hpp"

namespace curv {

/// Weight in fundamental-weight coordinates; evaluation on a coroot is the
/// dot product with the coroot's simple-coroot coordinates.
struct Weight {
  Vec coordinates;
  bool operator==(const Weight&) const = default;
};

/// Positive system of a simple root system. Roots are stored in simple-root
/// coordinates, coroots in simple-coroot coordinates (both integral); the
/// Cartan matrix follows the convention cartan[i][j] = α_j(h_{α_i}).
/// Root order is by height, ties broken lexicographically.
struct RootSystemData {
  char type = 'A';
  std::size_t rank = 0;
  std::vector<Vec> positive_roots;
  std::vector<Vec> coroots;
  std::vector<std::vector<long>> cartan;

  std::size_t num_positive() const { return positive_roots.size(); }
};

/// Valid ranks: A >= 1, B and C >= 2, D >= 3, E in 6..8, F = 4, G = 2.
RootSystemData build_root_system(char type, std::size_t rank);

/// Parses labels like "A2", "E7"; throws std::invalid_argument otherwise.
RootSystemData build_root_system(const std::string& label);

/// The configuration V of Theorem-style inputs: coroots in root order.
VectorConfiguration coroot_configuration(const RootSystemData& rs);

/// Coefficients (λ(h_α)) over the positive roots, in root order.
std::vector<Rational> curvature_coefficients(const RootSystemData& rs,
                                             const Weight& lambda);

/// Full Weyl orbit of lambda, deduplicated and sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootSystemData& rs, const Weight& lambda);

/// |W| as the orbit size of a strictly dominant weight. Guarded by
/// max_rank because the orbit is materialized.
std::uint64_t weyl_group_order(const RootSystemData& rs,
                               std::size_t max_rank = 7);

/// The ideal generators (w·ω_i)^{d_i+1} of the presentation, one per orbit
/// line, deduplicated by canonical scaling.
std::vector<IdealGenerator> corollary_generators(const RootSystemData& rs);

}  // namespace curv

#endif
