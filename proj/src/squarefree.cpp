#include "curv/squarefree.hpp"

#include <unordered_map>

#include "curv/errors.hpp"

namespace curv {

SquareFreeElement SquareFreeElement::unit() {
  SquareFreeElement e;
  e.add_term(0, Rational(1));
  return e;
}

SquareFreeElement SquareFreeElement::generator(std::size_t index0) {
  SquareFreeElement e;
  e.add_term(bit(index0), Rational(1));
  return e;
}

Rational SquareFreeElement::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SquareFreeElement::add_term(Mask m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SquareFreeElement SquareFreeElement::operator+(
    const SquareFreeElement& o) const {
  SquareFreeElement out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

SquareFreeElement SquareFreeElement::operator*(
    const SquareFreeElement& o) const {
  SquareFreeElement out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;  // some φ_i squared: the term dies
      out.add_term(ma | mb, ca * cb);
    }
  }
  return out;
}

SquareFreeElement SquareFreeElement::scaled(const Rational& c) const {
  SquareFreeElement out;
  if (c == 0) return out;
  for (const auto& [m, x] : terms_) out.add_term(m, x * c);
  return out;
}

SquareFreeElement SquareFreeElement::pow(unsigned k) const {
  SquareFreeElement out = unit();
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

GeneratorSet generators_from(const VectorConfiguration& cfg) {
  GeneratorSet gens;
  gens.thetas.resize(cfg.ambient_dim);
  for (std::size_t i = 0; i < cfg.ambient_dim; ++i)
    for (std::size_t j = 0; j < cfg.size(); ++j)
      gens.thetas[i].add_term(bit(j), cfg.vectors[j][i]);
  return gens;
}

SquareFreeElement evaluate(const Polynomial& f, const GeneratorSet& gens) {
  if (f.nvars() != gens.thetas.size())
    throw std::invalid_argument("polynomial arity != number of generators");
  SquareFreeElement out;
  for (const auto& [e, c] : f.terms()) {
    SquareFreeElement prod = SquareFreeElement::unit();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned rep = 0; rep < e[i]; ++rep) {
        prod = prod * gens.thetas[i];
        if (prod.is_zero()) break;
      }
    out = out + prod.scaled(c);
  }
  return out;
}

namespace {

Integer binom(std::size_t n, std::size_t k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Row index map: k-subsets of {1..N} in lex order of their index sequences.
std::unordered_map<Mask, std::size_t> subset_row_index(std::size_t n,
                                                       unsigned k) {
  std::unordered_map<Mask, std::size_t> index;
  std::vector<std::size_t> combo(k);
  std::size_t row = 0;
  // Standard lexicographic combination walk.
  for (unsigned i = 0; i < k; ++i) combo[i] = i;
  if (k > n) return index;
  while (true) {
    Mask m = 0;
    for (auto i : combo) m |= bit(i);
    index[m] = row++;
    unsigned i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (unsigned j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    if (k == 0) break;
  }
  if (k == 0) index[0] = 0;
  return index;
}

void check_row_limit(std::size_t n, unsigned k, std::size_t row_limit) {
  if (binom(n, k) > row_limit)
    throw ResourceLimitError("coefficient matrix would have " +
                             binom(n, k).get_str() + " rows (limit " +
                             std::to_string(row_limit) + ")");
}

// Column walk: monomials j_1 <= ... <= j_k in lex order, each column's
// θ-product reusing the length-(k-1) prefix product from the recursion stack.
void column_walk(const GeneratorSet& gens, unsigned remaining,
                 std::size_t minvar, const SquareFreeElement& prefix,
                 std::size_t& col, Matrix& out,
                 const std::unordered_map<Mask, std::size_t>& rows) {
  if (remaining == 0) {
    for (const auto& [m, c] : prefix.terms()) {
      auto it = rows.find(m);
      if (it != rows.end()) out.at(it->second, col) = c;
    }
    ++col;
    return;
  }
  for (std::size_t j = minvar; j < gens.thetas.size(); ++j)
    column_walk(gens, remaining - 1, j, prefix * gens.thetas[j], col, out,
                rows);
}

}  // namespace

Matrix coefficient_matrix(const VectorConfiguration& cfg, unsigned k,
                          std::size_t row_limit) {
  const std::size_t n = cfg.size();
  if (k > n) throw std::invalid_argument("degree exceeds number of vectors");
  check_row_limit(n, k, row_limit);

  std::size_t nrows = binom(n, k).get_ui();
  std::size_t ncols =
      cfg.ambient_dim == 0 ? (k == 0 ? 1 : 0)
                           : binom(cfg.ambient_dim + k - 1, k).get_ui();
  Matrix out(nrows, ncols);
  auto rows = subset_row_index(n, k);
  GeneratorSet gens = generators_from(cfg);
  std::size_t col = 0;
  if (ncols > 0)
    column_walk(gens, k, 0, SquareFreeElement::unit(), col, out, rows);
  return out;
}

GradedCount algebra_graded_dims_serial(const VectorConfiguration& cfg,
                                       std::size_t row_limit) {
  const std::size_t n = cfg.size();
  GradedCount out{std::vector<std::uint64_t>(n + 1, 0)};
  for (unsigned k = 0; k <= n; ++k)
    out.counts[k] = coefficient_matrix(cfg, k, row_limit).rank();
  return out;
}

GradedCount algebra_graded_dims(const VectorConfiguration& cfg,
                                std::size_t row_limit) {
  const std::size_t n = cfg.size();
  for (unsigned k = 0; k <= n; ++k) check_row_limit(n, k, row_limit);
  GradedCount out{std::vector<std::uint64_t>(n + 1, 0)};
#pragma omp parallel for schedule(dynamic)
  for (unsigned k = 0; k <= n; ++k)
    out.counts[k] = coefficient_matrix(cfg, k, row_limit).rank();
  return out;
}

namespace {

// Expansion rows for the dual space: DFS over k-subsets in lex order with
// shared partial products of the linear forms v_i.
void dual_walk(const VectorConfiguration& cfg, unsigned remaining,
               std::size_t mini, const Polynomial& prefix, std::size_t& row,
               Matrix& out, const std::map<Exponents, std::size_t>& cols) {
  if (remaining == 0) {
    for (const auto& [e, c] : prefix.terms()) out.at(row, cols.at(e)) = c;
    ++row;
    return;
  }
  for (std::size_t i = mini; i + remaining <= cfg.size(); ++i)
    dual_walk(cfg, remaining - 1, i + 1,
              prefix * Polynomial::linear_form(cfg.vectors[i]), row, out,
              cols);
}

Matrix dual_matrix(const VectorConfiguration& cfg, unsigned k,
                   std::size_t row_limit) {
  const std::size_t n = cfg.size();
  check_row_limit(n, k, row_limit);
  auto monomials = monomials_of_degree(cfg.ambient_dim, k);
  std::map<Exponents, std::size_t> cols;
  for (std::size_t j = 0; j < monomials.size(); ++j) cols[monomials[j]] = j;
  Matrix out(binom(n, k).get_ui(), monomials.size());
  std::size_t row = 0;
  dual_walk(cfg, k, 0, Polynomial::constant(cfg.ambient_dim, 1), row, out,
            cols);
  return out;
}

}  // namespace

GradedCount dual_graded_dims(const VectorConfiguration& cfg,
                             std::size_t row_limit) {
  const std::size_t n = cfg.size();
  for (unsigned k = 0; k <= n; ++k) check_row_limit(n, k, row_limit);
  GradedCount out{std::vector<std::uint64_t>(n + 1, 0)};
#pragma omp parallel for schedule(dynamic)
  for (unsigned k = 0; k <= n; ++k)
    out.counts[k] = dual_matrix(cfg, k, row_limit).rank();
  return out;
}

bool robust_basis_check(const VectorConfiguration& cfg) {
  Matroid matroid(cfg);
  auto robust = matroid.robust_subsets();
  if (robust.size() != matroid.independent_count()) return false;

  // Independence degree by degree: expand each m(S) in the monomial basis of
  // Sym(E) and compare ranks with the subset counts.
  std::vector<std::vector<Mask>> by_size(cfg.size() + 1);
  for (auto s : robust) by_size[popcount(s)].push_back(s);
  for (std::size_t d = 0; d <= cfg.size(); ++d) {
    if (by_size[d].empty()) continue;
    auto monomials = monomials_of_degree(cfg.ambient_dim, d);
    std::map<Exponents, std::size_t> cols;
    for (std::size_t j = 0; j < monomials.size(); ++j) cols[monomials[j]] = j;
    Matrix m(by_size[d].size(), monomials.size());
    for (std::size_t r = 0; r < by_size[d].size(); ++r) {
      Polynomial prod = Polynomial::constant(cfg.ambient_dim, 1);
      for (auto i : mask_to_indices(by_size[d][r]))
        prod = prod * Polynomial::linear_form(cfg.vectors[i]);
      for (const auto& [e, c] : prod.terms()) m.at(r, cols.at(e)) = c;
    }
    if (m.rank() != by_size[d].size()) return false;
  }
  return true;
}

}  // namespace curv
