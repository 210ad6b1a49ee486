#include "curv/config.hpp"

namespace curv {

bool mask_lex_less(Mask a, Mask b) {
  while (a && b) {
    std::size_t ia = std::countr_zero(a);
    std::size_t ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

VectorConfiguration::VectorConfiguration(std::size_t dim,
                                         std::vector<Vec> vecs)
    : ambient_dim(dim), vectors(std::move(vecs)) {
  if (vectors.size() > kMaxVectors)
    throw std::invalid_argument(
        "configuration exceeds the 64-vector enumeration limit");
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw std::invalid_argument(
          "vector length does not match ambient dimension");
}

Matrix VectorConfiguration::submatrix(Mask s) const {
  std::vector<Vec> cols;
  for (auto i : mask_to_indices(s)) cols.push_back(vectors[i]);
  return Matrix::from_cols(cols, ambient_dim);
}

std::size_t VectorConfiguration::rank() const {
  return submatrix(size() == 64 ? ~Mask(0) : (bit(size()) - 1)).rank();
}

VectorConfiguration VectorConfiguration::permuted(
    const std::vector<std::size_t>& perm) const {
  std::vector<Vec> vecs;
  for (auto i : perm) vecs.push_back(vectors[i]);
  return VectorConfiguration(ambient_dim, std::move(vecs));
}

}  // namespace curv
