#include <doctest.h>

#include <random>

#include "curv/matrix.hpp"
#include "oracles.hpp"

using namespace curv;

namespace {

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

// Rank over Z/p by plain modular elimination; used only as a cross-check.
std::size_t rank_mod_p(const Matrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(),
                                            std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      Integer num = q.get_num() % static_cast<long>(p);
      Integer den = q.get_den() % static_cast<long>(p);
      std::uint64_t nu = mpz_class(num + p).get_ui() % p;
      std::uint64_t de = mpz_class(den + p).get_ui() % p;
      // modular inverse by Fermat
      std::uint64_t inv = 1, base = de, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      a[i][j] = nu * inv % p;
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t inv = 1, base = a[r][c], e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      std::uint64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(identity(2).rank() == 2);
  CHECK(Matrix(3, 4).rank() == 0);
  Matrix b2 = Matrix::from_rows(
      {{1, -1}, {0, 2}, {2, 0}, {1, 1}});
  CHECK(b2.rank() == 2);
  CHECK(Matrix().rank() == 0);
}

TEST_CASE("kernel basis examples") {
  CHECK(identity(2).kernel_basis().empty());

  Matrix row(1, 2);
  row.at(0, 0) = 1;
  row.at(0, 1) = 1;
  auto k = row.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);

  Matrix cols = Matrix::from_cols({{1, 0}, {0, 1}, {1, 1}}, 2);
  auto k2 = cols.kernel_basis();
  REQUIRE(k2.size() == 1);
  // proportional to (1, 1, -1)
  CHECK(k2[0][0] == k2[0][1]);
  CHECK(k2[0][2] == -k2[0][0]);
}

TEST_CASE("kernel dimension complements rank") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    CHECK(m.rank() + m.kernel_basis().size() == c);
  }
}

TEST_CASE("in_span examples") {
  CHECK(in_span({0, 0}, {{1, 2}}));
  CHECK_FALSE(in_span({1, 1}, {{1, 0}}));
  CHECK(in_span({1, 1}, {{1, -1}, {0, 2}}));
}

TEST_CASE("rank properties: transpose, permutation, modular cross-check") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-6, 6);
  const std::uint64_t primes[3] = {1000003, 1000033, 1000037};
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    std::size_t rank = m.rank();
    CHECK(rank == m.transposed().rank());

    // row permutation
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix pm(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) pm.at(i, j) = m.at(perm[i], j);
    CHECK(pm.rank() == rank);

    // three independent primes must agree with the exact rank
    int agree = 0;
    for (auto p : primes)
      if (rank_mod_p(m, p) == rank) ++agree;
    CHECK(agree == 3);
  }
}

TEST_CASE("echelon state push/pop/express") {
  EchelonState st(2);
  CHECK(st.push({1, 0}));
  CHECK(st.push({0, 1}));
  CHECK_FALSE(st.push({1, 1}));
  std::vector<Rational> coeffs;
  REQUIRE(st.express({3, -2}, coeffs));
  CHECK(coeffs[0] == 3);
  CHECK(coeffs[1] == -2);
  st.pop();
  CHECK(st.rank() == 1);
  CHECK_FALSE(st.express({0, 1}, coeffs));
}
