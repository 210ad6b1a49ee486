#include "curv/polynomial.hpp"

#include <stdexcept>

namespace curv {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::linear_form(const Vec& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, const Exponents& e,
                                const Rational& c) {
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (auto x : e) t += x;
    if (t > d) d = t;
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * Rational(e[var]));
  }
  return out;
}

namespace {
void monomial_walk(std::size_t nvars, unsigned remaining, std::size_t minvar,
                   Exponents& current, std::vector<Exponents>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t j = minvar; j < nvars; ++j) {
    current[j] += 1;
    monomial_walk(nvars, remaining - 1, j, current, out);
    current[j] -= 1;
  }
}
}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Exponents current(nvars, 0);
  monomial_walk(nvars, d, 0, current, out);
  return out;
}

}  // namespace curv
