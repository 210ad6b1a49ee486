#include "curv/essential.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "curv/errors.hpp"

namespace curv {

namespace {

void require_spanning(const VectorConfiguration& cfg) {
  std::size_t r = cfg.rank();
  if (r != cfg.ambient_dim)
    throw std::invalid_argument(
        "configuration does not span the ambient space (rank " +
        std::to_string(r) + " of " + std::to_string(cfg.ambient_dim) + ")");
}

Matrix rows_matrix(const VectorConfiguration& cfg,
                   const std::vector<std::size_t>& indices) {
  Matrix m(indices.size(), cfg.ambient_dim);
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < cfg.ambient_dim; ++c)
      m.at(r, c) = cfg.vectors[indices[r]][c];
  return m;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Mask off_hyperplane(const VectorConfiguration& cfg, const Vec& normal) {
  Mask m = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (dot(normal, cfg.vectors[i]) != 0) m |= bit(i);
  return m;
}

void combinations(std::size_t n, unsigned k,
                  const std::function<void(const std::vector<std::size_t>&)>&
                      emit) {
  std::vector<std::size_t> combo(k);
  if (k > n) return;
  for (unsigned i = 0; i < k; ++i) combo[i] = i;
  while (true) {
    emit(combo);
    unsigned i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (unsigned j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace

std::vector<EssentialHyperplane> essential_hyperplanes(
    const VectorConfiguration& cfg) {
  require_spanning(cfg);
  const std::size_t n = cfg.ambient_dim;

  std::map<Vec, EssentialHyperplane, VecLess> found;
  combinations(cfg.size(), n == 0 ? 0 : n - 1,
               [&](const std::vector<std::size_t>& combo) {
                 Matrix m = rows_matrix(cfg, combo);
                 if (m.rank() != combo.size()) return;  // not independent
                 auto kernel = m.kernel_basis();
                 if (kernel.size() != 1) return;
                 Vec normal = canonical_line(kernel[0]);
                 if (found.count(normal)) return;
                 Mask off = off_hyperplane(cfg, normal);
                 found.emplace(normal, EssentialHyperplane{
                                           off, normal, popcount(off)});
               });
  std::vector<EssentialHyperplane> out;
  for (auto& [_, h] : found) out.push_back(std::move(h));
  return out;
}

std::vector<IdealGenerator> ideal_generators(const VectorConfiguration& cfg) {
  std::vector<IdealGenerator> out;
  for (const auto& h : essential_hyperplanes(cfg))
    out.push_back(IdealGenerator{h.normal, static_cast<unsigned>(h.d + 1)});
  return out;
}

bool generators_vanish(const VectorConfiguration& cfg) {
  GeneratorSet gens = generators_from(cfg);
  for (const auto& g : ideal_generators(cfg)) {
    // substitution is a homomorphism: push the linear form through first and
    // take the power inside the square-free algebra, where it stays small
    SquareFreeElement lam =
        evaluate(Polynomial::linear_form(g.linear_form), gens);
    if (!lam.pow(g.power).is_zero()) return false;
  }
  return true;
}

bool vanishing_membership(const VectorConfiguration& cfg,
                          const Polynomial& f) {
  require_spanning(cfg);
  return evaluate(f, generators_from(cfg)).is_zero();
}

GradedCount quotient_hilbert(const VectorConfiguration& cfg,
                             std::size_t max_degree, std::size_t row_limit) {
  auto gens = ideal_generators(cfg);  // checks the spanning precondition
  const std::size_t n = cfg.ambient_dim;

  // Precompute λ_H^{d(H)+1} once per generator.
  std::vector<Polynomial> powers;
  for (const auto& g : gens)
    powers.push_back(Polynomial::linear_form(g.linear_form).pow(g.power));

  {
    Integer top;
    mpz_bin_uiui(top.get_mpz_t(), n + max_degree - 1, max_degree);
    if (n > 0 && top > row_limit)
      throw ResourceLimitError("quotient degree " +
                               std::to_string(max_degree) +
                               " exceeds the row limit");
  }

  GradedCount out{std::vector<std::uint64_t>(max_degree + 1, 0)};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto monomials = monomials_of_degree(n, static_cast<unsigned>(d));
    std::map<Exponents, std::size_t> cols;
    for (std::size_t j = 0; j < monomials.size(); ++j) cols[monomials[j]] = j;

    // Span of { m * λ^p : deg m = d - p } inside degree d.
    std::vector<Vec> rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].power > d) continue;
      for (const auto& shift :
           monomials_of_degree(n, static_cast<unsigned>(d - gens[g].power))) {
        Vec row(monomials.size(), Rational(0));
        for (const auto& [e, c] : powers[g].terms()) {
          Exponents target(n);
          for (std::size_t i = 0; i < n; ++i) target[i] = e[i] + shift[i];
          row[cols.at(target)] = c;
        }
        rows.push_back(std::move(row));
      }
    }
    std::size_t span_rank =
        rows.empty() ? 0 : Matrix::from_rows(rows).rank();
    out.counts[d] = monomials.size() - span_rank;
  }
  return out;
}

namespace {

// Lift a functional on the contraction chart (pivot coordinate dropped) back
// to E: precompose with the projection along the last vector.
Vec lift_normal(const Vec& mu, const Vec& last, std::size_t pivot) {
  Vec lambda(last.size(), Rational(0));
  std::size_t pos = 0;
  Rational at_pivot = 0;
  for (std::size_t q = 0; q < last.size(); ++q) {
    if (q == pivot) continue;
    lambda[q] = mu[pos];
    at_pivot -= mu[pos] * last[q];
    ++pos;
  }
  lambda[pivot] = at_pivot / last[pivot];
  return lambda;
}

using HyperplaneMap = std::map<Vec, std::size_t, VecLess>;  // normal -> d

HyperplaneMap to_map(const std::vector<EssentialHyperplane>& hs) {
  HyperplaneMap m;
  for (const auto& h : hs) m[h.normal] = h.d;
  return m;
}

}  // namespace

bool essential_deletion_contraction_check(const VectorConfiguration& cfg) {
  require_spanning(cfg);
  std::size_t pivot = contraction_pivot(cfg);
  auto [vprime, vsecond] = delete_contract(cfg);
  const Vec& last = cfg.vectors.back();

  HyperplaneMap direct = to_map(essential_hyperplanes(cfg));

  HyperplaneMap predicted;
  // Contraction side: lifted hyperplanes keep their V''-multiplicities.
  if (vsecond.ambient_dim > 0 && vsecond.spans()) {
    for (const auto& h : essential_hyperplanes(vsecond)) {
      Vec lifted = canonical_line(lift_normal(h.normal, last, pivot));
      predicted[lifted] = h.d;
    }
  }
  if (vprime.rank() == cfg.ambient_dim) {
    // Deletion spans: hyperplanes avoiding v_N gain it in their index set.
    for (const auto& h : essential_hyperplanes(vprime))
      if (!predicted.count(h.normal)) predicted[h.normal] = h.d + 1;
  } else {
    // Deletion has rank n-1: its span is the one extra essential hyperplane.
    Matrix m(vprime.size(), cfg.ambient_dim);
    for (std::size_t r = 0; r < vprime.size(); ++r)
      for (std::size_t c = 0; c < cfg.ambient_dim; ++c)
        m.at(r, c) = vprime.vectors[r][c];
    auto kernel = m.kernel_basis();
    if (kernel.size() != 1) return false;
    Vec normal = canonical_line(kernel[0]);
    predicted[normal] = popcount(off_hyperplane(cfg, normal));
  }
  return predicted == direct;
}

bool derivative_membership_check(const VectorConfiguration& cfg,
                                 const Polynomial& f) {
  if (cfg.vectors.empty() || is_zero(cfg.vectors.back()))
    throw std::invalid_argument(
        "derivative_membership_check requires a nonzero last vector");
  const std::size_t n = cfg.ambient_dim;
  const std::size_t N = cfg.size();
  if (f.nvars() != n)
    throw std::invalid_argument("polynomial arity mismatch");

  // Adapted generator basis: column operations so the new θ_n has
  // φ_N-coefficient 1 and the others have none. Rows of `a` are the θ's.
  std::vector<Vec> a(n, Vec(N));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < N; ++j) a[i][j] = cfg.vectors[j][i];
  const Vec& last = cfg.vectors.back();
  std::size_t i0 = 0;
  while (last[i0] == 0) ++i0;
  Vec theta_n = a[i0];
  for (auto& x : theta_n) x /= last[i0];
  std::vector<Vec> adapted;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == i0) continue;
    Vec row = a[i];
    for (std::size_t j = 0; j < N; ++j) row[j] -= last[i] * theta_n[j];
    adapted.push_back(std::move(row));
  }
  adapted.push_back(std::move(theta_n));

  auto gens_of = [](const std::vector<Vec>& rows) {
    GeneratorSet g;
    for (const auto& r : rows) {
      SquareFreeElement theta;
      for (std::size_t j = 0; j < r.size(); ++j) theta.add_term(bit(j), r[j]);
      g.thetas.push_back(std::move(theta));
    }
    return g;
  };

  // Deleted configuration in the same adapted coordinates: drop φ_N.
  std::vector<Vec> adapted_prime;
  for (const auto& r : adapted)
    adapted_prime.emplace_back(r.begin(), r.end() - 1);

  bool lhs = evaluate(f, gens_of(adapted)).is_zero();
  bool rhs = evaluate(f, gens_of(adapted_prime)).is_zero() &&
             evaluate(f.derivative(n - 1), gens_of(adapted_prime)).is_zero();
  return lhs == rhs;
}

std::vector<Mask> essential_index_subsets(const VectorConfiguration& cfg) {
  std::vector<Mask> out;
  for (const auto& h : essential_hyperplanes(cfg)) out.push_back(h.index_set);
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

bool remark1_crosscheck(const VectorConfiguration& cfg) {
  require_spanning(cfg);
  const std::size_t N = cfg.size();
  const std::size_t n = cfg.ambient_dim;
  if (N > 16)
    throw ResourceLimitError("remark1_crosscheck is limited to 16 vectors");

  std::vector<Mask> direct = essential_index_subsets(cfg);

  // Characterization 1: minimal I whose coordinate plane meets P in
  // dimension one, i.e. the complementary vectors have rank n-1.
  Mask full = N == 64 ? ~Mask(0) : (bit(N) - 1);
  auto comp_rank = [&](Mask s) { return cfg.submatrix(full & ~s).rank(); };
  std::vector<Mask> minimal;
  for (Mask s = 1; s <= full; ++s) {
    if (comp_rank(s) + 1 != n) continue;
    bool is_minimal = true;
    for (auto i : mask_to_indices(s))
      if (comp_rank(s & ~bit(i)) + 1 == n) {
        is_minimal = false;
        break;
      }
    if (is_minimal) minimal.push_back(s);
    if (s == full) break;
  }
  std::sort(minimal.begin(), minimal.end(), mask_lex_less);

  // Characterization 2: index parts of the cycles of {φ_1..φ_N, θ_1..θ_n}
  // inside F*.
  std::vector<Vec> extended;
  for (std::size_t j = 0; j < N; ++j) {
    Vec e(N, Rational(0));
    e[j] = 1;
    extended.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec theta(N);
    for (std::size_t j = 0; j < N; ++j) theta[j] = cfg.vectors[j][i];
    extended.push_back(std::move(theta));
  }
  // The index part of a mixed cycle is the support of a nonzero vector of P;
  // the essential subsets are exactly the inclusion-minimal such supports
  // (the cocircuits of the configuration's matroid).
  Matroid extended_matroid(VectorConfiguration(N, extended));
  std::vector<Mask> index_parts;
  Mask phi_part = full;
  for (const auto& c : extended_matroid.circuits()) {
    Mask index_part = c.support & phi_part;
    if (index_part == 0 || index_part == c.support) continue;
    index_parts.push_back(index_part);
  }
  std::sort(index_parts.begin(), index_parts.end(), mask_lex_less);
  index_parts.erase(std::unique(index_parts.begin(), index_parts.end()),
                    index_parts.end());
  std::vector<Mask> from_cycles;
  for (Mask a : index_parts) {
    bool is_minimal = true;
    for (Mask b : index_parts)
      if (b != a && (a & b) == b) {
        is_minimal = false;
        break;
      }
    if (is_minimal) from_cycles.push_back(a);
  }

  return direct == minimal && direct == from_cycles;
}

}  // namespace curv
