#include "curv/matroid.hpp"

#include <algorithm>
#include <map>

#include "curv/errors.hpp"

namespace curv {

Matroid::Matroid(VectorConfiguration cfg) : cfg_(std::move(cfg)) {
  std::size_t n = cfg_.size();
  full_ = n == 64 ? ~Mask(0) : (bit(n) - 1);
  rank_ = cfg_.rank();
  by_min_.resize(n);
}

bool Matroid::is_independent(Mask s) const {
  if ((s & ~full_) != 0)
    throw std::invalid_argument("subset mask out of range");
  if (popcount(s) > rank_) return false;
  return cfg_.submatrix(s).rank() == popcount(s);
}

// Depth-first search over independent subsets with ascending indices.
// Every independent subset is visited exactly once. With `collect` set,
// each failed extension yields the unique circuit of S ∪ {i}, which is how
// the full circuit list is produced (every circuit C arises from the node
// C minus its maximal element).
template <class Visit>
void Matroid::enumerate_from(std::size_t first, EchelonState& st, Mask s,
                             Visit&& visit, bool collect) const {
  visit(s, st);
  // At full rank no extension is independent; only circuit collection needs
  // to keep probing the failures.
  if (st.rank() == rank_ && !collect) return;
  for (std::size_t i = first; i < cfg_.size(); ++i) {
    if (st.push(cfg_.vectors[i])) {
      enumerate_from(i + 1, st, s | bit(i), visit, collect);
      st.pop();
    } else if (collect) {
      std::vector<Rational> coeffs;
      st.express(cfg_.vectors[i], coeffs);
      Mask support = bit(i);
      auto members = mask_to_indices(s);
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) support |= bit(members[k]);
      if (circuit_supports_.insert(support).second) {
        // dependence: v_i - sum coeffs = 0, coefficients in ascending index
        // order, rescaled so the first one is 1.
        std::vector<Rational> dep;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          if (coeffs[k] != 0) dep.push_back(-coeffs[k]);
        dep.push_back(Rational(1));  // slot of v_i, the maximal element
        Rational lead = dep.front();
        for (auto& d : dep) d /= lead;
        circuits_.push_back(Circuit{support, std::move(dep)});
      }
    }
  }
}

void Matroid::ensure_circuits() const {
  if (circuits_ready_) return;
  circuits_.clear();
  circuit_supports_.clear();
  EchelonState st(cfg_.ambient_dim);
  enumerate_from(0, st, 0, [](Mask, const EchelonState&) {}, true);
  std::sort(circuits_.begin(), circuits_.end(),
            [](const Circuit& a, const Circuit& b) {
              return mask_lex_less(a.support, b.support);
            });
  for (auto& v : by_min_) v.clear();
  for (const auto& c : circuits_)
    by_min_[std::countr_zero(c.support)].push_back(&c);
  circuits_ready_ = true;
}

const std::vector<Circuit>& Matroid::circuits() const {
  ensure_circuits();
  return circuits_;
}

Mask Matroid::externally_active_set(Mask s) const {
  ensure_circuits();
  Mask active = 0;
  for (std::size_t m = 0; m < cfg_.size(); ++m) {
    if (contains(s, m)) continue;
    for (const Circuit* c : by_min_[m]) {
      if ((c->support & ~s) == bit(m)) {
        active |= bit(m);
        break;
      }
    }
  }
  return active;
}

std::size_t Matroid::external_activity(Mask s) const {
  if (!is_independent(s))
    throw std::invalid_argument(
        "external activity is defined for independent subsets only");
  return popcount(externally_active_set(s));
}

std::uint64_t Matroid::independent_count_serial() const {
  std::uint64_t count = 0;
  EchelonState st(cfg_.ambient_dim);
  enumerate_from(0, st, 0,
                 [&](Mask, const EchelonState&) { ++count; }, false);
  return count;
}

GradedCount Matroid::graded_counts_serial() const {
  ensure_circuits();
  const std::size_t n = cfg_.size();
  GradedCount out{std::vector<std::uint64_t>(n + 1, 0)};
  EchelonState st(cfg_.ambient_dim);
  enumerate_from(0, st, 0,
                 [&](Mask s, const EchelonState&) {
                   std::size_t act = popcount(externally_active_set(s));
                   out.counts[n - popcount(s) - act]++;
                 },
                 false);
  return out;
}

std::uint64_t Matroid::independent_count() const {
  const std::size_t n = cfg_.size();
  std::uint64_t count = 1;  // the empty subset
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (std::size_t i = 0; i < n; ++i) {
    EchelonState st(cfg_.ambient_dim);
    if (!st.push(cfg_.vectors[i])) continue;
    std::uint64_t local = 0;
    enumerate_from(i + 1, st, bit(i),
                   [&](Mask, const EchelonState&) { ++local; }, false);
    count += local;
  }
  return count;
}

GradedCount Matroid::graded_counts() const {
  ensure_circuits();
  const std::size_t n = cfg_.size();
  GradedCount out{std::vector<std::uint64_t>(n + 1, 0)};
  out.counts[n - popcount(externally_active_set(0))]++;  // S = ∅
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i) {
      EchelonState st(cfg_.ambient_dim);
      if (!st.push(cfg_.vectors[i])) continue;
      enumerate_from(i + 1, st, bit(i),
                     [&](Mask s, const EchelonState&) {
                       std::size_t act = popcount(externally_active_set(s));
                       local[n - popcount(s) - act]++;
                     },
                     false);
    }
#pragma omp critical
    for (std::size_t k = 0; k <= n; ++k) out.counts[k] += local[k];
  }
  return out;
}

bool Matroid::is_robust(Mask s) const {
  ensure_circuits();
  for (const auto& c : circuits_)
    if ((s & c.support) == bit(std::countr_zero(c.support))) return false;
  return true;
}

std::vector<Mask> Matroid::robust_subsets() const {
  const std::size_t n = cfg_.size();
  if (n > 24)
    throw ResourceLimitError(
        "robust-subset enumeration is limited to 24 vectors");
  ensure_circuits();
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_; ++s) {
    if (is_robust(s)) out.push_back(s);
    if (s == full_) break;
  }
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

Mask Matroid::nbc_bijection(Mask s) const {
  if (!is_independent(s))
    throw std::invalid_argument(
        "nbc_bijection is defined for independent subsets only");
  Mask antirobust = s | externally_active_set(s);
  return full_ & ~antirobust;
}

std::size_t contraction_pivot(const VectorConfiguration& cfg) {
  if (cfg.vectors.empty() || is_zero(cfg.vectors.back()))
    throw std::invalid_argument(
        "delete_contract requires a nonzero last vector");
  const Vec& v = cfg.vectors.back();
  for (std::size_t p = 0; p < v.size(); ++p)
    if (v[p] != 0) return p;
  throw std::logic_error("unreachable");
}

std::pair<VectorConfiguration, VectorConfiguration> delete_contract(
    const VectorConfiguration& cfg) {
  std::size_t p = contraction_pivot(cfg);
  const Vec& last = cfg.vectors.back();

  std::vector<Vec> deleted(cfg.vectors.begin(), cfg.vectors.end() - 1);
  VectorConfiguration vprime(cfg.ambient_dim, deleted);

  // Quotient chart: project along the last vector, then drop the pivot
  // coordinate. The remaining standard basis vectors complete v_N to a basis.
  std::vector<Vec> images;
  for (std::size_t j = 0; j + 1 < cfg.vectors.size(); ++j) {
    const Vec& v = cfg.vectors[j];
    Rational f = v[p] / last[p];
    Vec w;
    w.reserve(cfg.ambient_dim - 1);
    for (std::size_t c = 0; c < cfg.ambient_dim; ++c) {
      if (c == p) continue;
      w.push_back(v[c] - f * last[c]);
    }
    images.push_back(std::move(w));
  }
  VectorConfiguration vsecond(cfg.ambient_dim - 1, std::move(images));
  return {std::move(vprime), std::move(vsecond)};
}

}  // namespace curv
