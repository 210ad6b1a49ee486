#include <doctest.h>

#include <random>

#include "curv/matroid.hpp"
#include "curv/rootsys.hpp"
#include "curv/squarefree.hpp"
#include "oracles.hpp"

using namespace curv;
using namespace curv::testing;

TEST_CASE("parallel and serial kernels agree on root systems") {
  for (const char* label : {"A3", "B3", "C3", "D4"}) {
    auto cfg = coroot_configuration(build_root_system(label));
    Matroid m(cfg);
    CAPTURE(label);
    CHECK(m.independent_count() == m.independent_count_serial());
    CHECK(m.graded_counts() == m.graded_counts_serial());
    CHECK(algebra_graded_dims(cfg) == algebra_graded_dims_serial(cfg));
  }
}

TEST_CASE("parallel and serial kernels agree on random configs") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    VectorConfiguration cfg = random_spanning_config(rng);
    Matroid m(cfg);
    CHECK(m.independent_count() == m.independent_count_serial());
    CHECK(m.graded_counts() == m.graded_counts_serial());
    CHECK(algebra_graded_dims(cfg) == algebra_graded_dims_serial(cfg));
  }
}

TEST_CASE("repeated parallel runs are deterministic") {
  auto cfg = coroot_configuration(build_root_system("B3"));
  Matroid m(cfg);
  auto first = m.graded_counts();
  for (int i = 0; i < 3; ++i) CHECK(m.graded_counts() == first);
  auto a_first = algebra_graded_dims(cfg);
  for (int i = 0; i < 3; ++i) CHECK(algebra_graded_dims(cfg) == a_first);
}
