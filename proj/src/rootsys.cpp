#include "curv/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "curv/errors.hpp"

namespace curv {

namespace {

struct Diagram {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Rational> d;  // half squared lengths, up to common scale
};

Diagram diagram_for(char type, std::size_t rank) {
  Diagram dg;
  dg.d.assign(rank, Rational(1));
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) dg.edges.push_back({i, i + 1});
  };
  switch (type) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      chain(rank);
      break;
    case 'B':  // last simple root short
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      chain(rank);
      dg.d[rank - 1] = Rational(1, 2);
      break;
    case 'C':  // last simple root long
      if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
      chain(rank);
      dg.d[rank - 1] = Rational(2);
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
      chain(rank - 1);
      dg.edges.push_back({rank - 3, rank - 1});
      break;
    case 'E':
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("type E requires rank 6..8");
      // Bourbaki numbering: chain 1-3-4-5-...-rank, node 2 hangs off node 4.
      dg.edges.push_back({0, 2});
      for (std::size_t i = 2; i + 1 < rank; ++i) dg.edges.push_back({i, i + 1});
      dg.edges.push_back({1, 3});
      break;
    case 'F':
      if (rank != 4) throw std::invalid_argument("type F requires rank 4");
      chain(4);
      dg.d[2] = dg.d[3] = Rational(1, 2);  // α_3, α_4 short
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("type G requires rank 2");
      chain(2);
      dg.d[1] = Rational(3);  // α_2 long
      break;
    default:
      throw std::invalid_argument(std::string("unknown type '") + type +
                                  "' (valid: A B C D E F G)");
  }
  return dg;
}

std::size_t expected_count(char type, std::size_t l) {
  switch (type) {
    case 'A': return l * (l + 1) / 2;
    case 'B':
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

long height_of(const Vec& root) {
  Rational h = 0;
  for (const auto& x : root) h += x;
  assert(h.get_den() == 1);
  return h.get_num().get_si();
}

}  // namespace

RootSystemData build_root_system(char type, std::size_t rank) {
  Diagram dg = diagram_for(type, rank);

  // cartan[i][j] = α_j(h_i) = 2 (α_j, α_i) / (α_i, α_i); for adjacent nodes
  // (α_i, α_j) = -max(d_i, d_j).
  std::vector<std::vector<long>> cartan(rank, std::vector<long>(rank, 0));
  std::vector<std::vector<Rational>> gram(rank, std::vector<Rational>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    cartan[i][i] = 2;
    gram[i][i] = 2 * dg.d[i];
  }
  for (auto [i, j] : dg.edges) {
    Rational prod = -std::max(dg.d[i], dg.d[j]);
    gram[i][j] = gram[j][i] = prod;
    Rational cij = prod / dg.d[i];
    Rational cji = prod / dg.d[j];
    assert(cij.get_den() == 1 && cji.get_den() == 1);
    cartan[i][j] = cij.get_num().get_si();
    cartan[j][i] = cji.get_num().get_si();
  }

  // Reflection closure of the simple roots, in simple-root coordinates.
  std::set<Vec, VecLess> roots;
  std::vector<Vec> frontier;
  for (std::size_t i = 0; i < rank; ++i) {
    Vec alpha(rank, Rational(0));
    alpha[i] = 1;
    roots.insert(alpha);
    frontier.push_back(alpha);
    Vec neg = alpha;
    neg[i] = -1;
    roots.insert(neg);
    frontier.push_back(neg);
  }
  while (!frontier.empty()) {
    Vec beta = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < rank; ++i) {
      Rational pairing = 0;  // β(h_i)
      for (std::size_t j = 0; j < rank; ++j)
        pairing += beta[j] * Rational(cartan[i][j]);
      Vec image = beta;
      image[i] -= pairing;
      if (roots.insert(image).second) frontier.push_back(image);
    }
  }

  RootSystemData rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = std::move(cartan);
  for (const auto& beta : roots) {
    bool positive = true;
    for (const auto& x : beta)
      if (x < 0) {
        positive = false;
        break;
      }
    if (positive) rs.positive_roots.push_back(beta);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Vec& a, const Vec& b) {
              long ha = height_of(a), hb = height_of(b);
              if (ha != hb) return ha < hb;
              // within a height, weight toward the earlier simple roots
              // first, so the simple roots themselves come out in index
              // order (α_1 before α_2, ...)
              return compare_vec(a, b) > 0;
            });
  if (rs.positive_roots.size() != expected_count(type, rank))
    throw std::logic_error("root generation produced an unexpected count");

  // Coroot of β in simple-coroot coordinates: β_j d_j / d_β.
  for (const auto& beta : rs.positive_roots) {
    Rational norm = 0;  // (β, β)
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        norm += beta[i] * beta[j] * gram[i][j];
    Rational d_beta = norm / 2;
    Vec coroot(rank);
    for (std::size_t j = 0; j < rank; ++j) {
      coroot[j] = beta[j] * dg.d[j] / d_beta;
      coroot[j].canonicalize();
      assert(coroot[j].get_den() == 1);
    }
    rs.coroots.push_back(std::move(coroot));
  }
  return rs;
}

RootSystemData build_root_system(const std::string& label) {
  if (label.size() < 2)
    throw std::invalid_argument("root system label too short: '" + label +
                                "'");
  char type = label[0];
  std::size_t rank;
  try {
    std::size_t used = 0;
    rank = std::stoul(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid root system label: '" + label + "'");
  }
  return build_root_system(type, rank);
}

VectorConfiguration coroot_configuration(const RootSystemData& rs) {
  return VectorConfiguration(rs.rank, rs.coroots);
}

std::vector<Rational> curvature_coefficients(const RootSystemData& rs,
                                             const Weight& lambda) {
  if (lambda.coordinates.size() != rs.rank)
    throw std::invalid_argument("weight length does not match rank");
  std::vector<Rational> out;
  for (const auto& h : rs.coroots) {
    Rational v = 0;
    for (std::size_t i = 0; i < rs.rank; ++i)
      v += lambda.coordinates[i] * h[i];
    out.push_back(v);
  }
  return out;
}

std::vector<Weight> weyl_orbit(const RootSystemData& rs,
                               const Weight& lambda) {
  if (lambda.coordinates.size() != rs.rank)
    throw std::invalid_argument("weight length does not match rank");
  std::set<Vec, VecLess> orbit;
  std::vector<Vec> frontier{lambda.coordinates};
  orbit.insert(lambda.coordinates);
  while (!frontier.empty()) {
    Vec mu = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < rs.rank; ++j) {
      // s_j in fundamental-weight coordinates.
      Vec image = mu;
      for (std::size_t i = 0; i < rs.rank; ++i)
        image[i] -= mu[j] * Rational(rs.cartan[i][j]);
      if (orbit.insert(image).second) frontier.push_back(image);
    }
  }
  std::vector<Weight> out;
  for (const auto& v : orbit) out.push_back(Weight{v});
  return out;
}

std::uint64_t weyl_group_order(const RootSystemData& rs,
                               std::size_t max_rank) {
  if (rs.rank > max_rank)
    throw ResourceLimitError(
        "weyl_group_order is orbit-based and limited to rank " +
        std::to_string(max_rank));
  Weight regular{Vec(rs.rank, Rational(1))};
  return weyl_orbit(rs, regular).size();
}

std::vector<IdealGenerator> corollary_generators(const RootSystemData& rs) {
  std::vector<IdealGenerator> out;
  std::set<Vec, VecLess> seen;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    // d_i: positive roots whose coroot has a nonzero i-th coordinate, i.e.
    // coroots off the zero hyperplane of ω_i.
    unsigned d = 0;
    for (const auto& h : rs.coroots)
      if (h[i] != 0) ++d;
    Weight omega{Vec(rs.rank, Rational(0))};
    omega.coordinates[i] = 1;
    for (const auto& w : weyl_orbit(rs, omega)) {
      Vec line = canonical_line(w.coordinates);
      if (seen.insert(line).second)
        out.push_back(IdealGenerator{line, d + 1});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IdealGenerator& a, const IdealGenerator& b) {
              return VecLess{}(a.linear_form, b.linear_form);
            });
  return out;
}

}  // namespace curv
