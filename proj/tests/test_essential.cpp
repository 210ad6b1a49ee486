#include <doctest.h>

#include <random>

#include "curv/essential.hpp"
#include "oracles.hpp"

using namespace curv;
using namespace curv::testing;

namespace {

VectorConfiguration a2_coroots() {
  return VectorConfiguration(2, {{1, 0}, {0, 1}, {1, 1}});
}

Mask mask_of(std::initializer_list<std::size_t> indices1) {
  Mask m = 0;
  for (auto i : indices1) m |= bit(i - 1);
  return m;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, 4);
  std::uniform_int_distribution<std::size_t> terms(1, 5);
  Polynomial f(nvars);
  std::size_t t = terms(rng);
  for (std::size_t i = 0; i < t; ++i) {
    Exponents e(nvars, 0);
    unsigned total = deg(rng);
    for (unsigned j = 0; j < total; ++j) e[rng() % nvars] += 1;
    int c = coeff(rng);
    if (c == 0) c = 1;
    f.add_term(e, c);
  }
  return f;
}

}  // namespace

TEST_CASE("A2 essential hyperplanes") {
  auto hps = essential_hyperplanes(a2_coroots());
  REQUIRE(hps.size() == 3);
  // sorted by canonical normal: (0,1) < (1,-1) < (1,0)
  CHECK(hps[0].normal == Vec{0, 1});
  CHECK(hps[1].normal == Vec{1, -1});
  CHECK(hps[2].normal == Vec{1, 0});
  for (const auto& h : hps) CHECK(h.d == 2);
  // index sets: off x2=0 -> {2,3}; off x1=x2 -> {1,2}; off x1=0 -> {1,3}
  CHECK(hps[0].index_set == mask_of({2, 3}));
  CHECK(hps[1].index_set == mask_of({1, 2}));
  CHECK(hps[2].index_set == mask_of({1, 3}));

  auto subsets = essential_index_subsets(a2_coroots());
  CHECK(subsets == std::vector<Mask>{mask_of({1, 2}), mask_of({1, 3}),
                                     mask_of({2, 3})});
}

TEST_CASE("non-spanning input rejected") {
  VectorConfiguration flat(2, {{1, 0}, {2, 0}});
  CHECK_THROWS_AS(essential_hyperplanes(flat), std::invalid_argument);
  CHECK_THROWS_AS(quotient_hilbert(flat, 2), std::invalid_argument);
}

TEST_CASE("ideal generators vanish under the theta substitution") {
  std::mt19937_64 rng(909);
  CHECK(generators_vanish(a2_coroots()));
  for (int trial = 0; trial < 8; ++trial)
    CHECK(generators_vanish(random_spanning_config(rng)));
}

TEST_CASE("quotient Hilbert function matches the other engines") {
  auto cfg = a2_coroots();
  auto q = quotient_hilbert(cfg, 4);
  CHECK(q.counts == std::vector<std::uint64_t>{1, 2, 3, 1, 0});

  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 8; ++trial) {
    VectorConfiguration rc = random_spanning_config(rng);
    auto graded = Matroid(rc).graded_counts();
    auto qh = quotient_hilbert(rc, rc.size() + 1);
    for (std::size_t k = 0; k <= rc.size(); ++k)
      CHECK(qh.counts[k] == graded.counts[k]);
    CHECK(qh.counts[rc.size() + 1] == 0);
  }
}

TEST_CASE("essential deletion/contraction recursion") {
  std::mt19937_64 rng(1111);
  CHECK(essential_deletion_contraction_check(a2_coroots()));
  CHECK(essential_deletion_contraction_check(
      VectorConfiguration(2, {{1, -1}, {0, 2}, {2, 0}, {1, 1}})));
  int done = 0;
  while (done < 10) {
    VectorConfiguration cfg = random_spanning_config(rng);
    if (cfg.ambient_dim < 2) continue;
    // both branches need the deletion or contraction to stay meaningful
    CHECK(essential_deletion_contraction_check(cfg));
    ++done;
  }
}

TEST_CASE("derivative membership equivalence") {
  std::mt19937_64 rng(1212);
  int done = 0;
  while (done < 6) {
    VectorConfiguration cfg = random_spanning_config(rng);
    if (cfg.ambient_dim < 2) continue;
    for (int t = 0; t < 15; ++t) {
      Polynomial f = random_polynomial(rng, cfg.ambient_dim);
      CHECK(derivative_membership_check(cfg, f));
    }
    ++done;
  }
}

TEST_CASE("vanishing membership basic cases") {
  auto cfg = a2_coroots();
  // x1² x2² has degree 4 > N, must vanish
  Polynomial f = Polynomial::monomial(2, {2, 2}, 1);
  CHECK(vanishing_membership(cfg, f));
  // x1 does not vanish
  CHECK_FALSE(vanishing_membership(cfg, Polynomial::linear_form({1, 0})));
  // λ_H³ for H = {x1=x2}
  Polynomial lam = Polynomial::linear_form({1, -1});
  CHECK(vanishing_membership(cfg, lam.pow(3)));
  CHECK_FALSE(vanishing_membership(cfg, lam.pow(2)));
}

TEST_CASE("remark 1 cross-check") {
  std::mt19937_64 rng(1313);
  CHECK(remark1_crosscheck(a2_coroots()));
  for (int trial = 0; trial < 6; ++trial)
    CHECK(remark1_crosscheck(random_spanning_config(rng)));
}
