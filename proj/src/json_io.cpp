#include "curv/json_io.hpp"

#include <cstdint>

namespace curv {

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return q.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw std::invalid_argument(
      "rational literal must be an integer or a \"p/q\" string");
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  Vec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json config_to_json(const VectorConfiguration& cfg) {
  Json out;
  out["ambient_dim"] = cfg.ambient_dim;
  out["vectors"] = Json::array();
  for (const auto& v : cfg.vectors) out["vectors"].push_back(vec_to_json(v));
  return out;
}

VectorConfiguration config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vectors"))
    throw std::invalid_argument(
        "configuration document needs ambient_dim and vectors");
  std::size_t dim = j.at("ambient_dim").get<std::size_t>();
  std::vector<Vec> vectors;
  for (const auto& v : j.at("vectors")) vectors.push_back(vec_from_json(v));
  return VectorConfiguration(dim, std::move(vectors));
}

Json graded_to_json(const GradedCount& g) {
  Json out = Json::array();
  for (auto c : g.counts) out.push_back(c);
  return out;
}

Json mask_to_json(Mask m) {
  Json out = Json::array();
  for (auto i : mask_to_indices(m)) out.push_back(i + 1);
  return out;
}

std::string input_hash(const Json& j) {
  std::string dump = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace curv
