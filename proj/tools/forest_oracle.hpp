#ifndef CURV_TOOLS_FOREST_ORACLE_HPP
#define CURV_TOOLS_FOREST_ORACLE_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace curv::oracle {

// Brute-force enumeration of forests on n labelled vertices with the
// inversion statistic matching the coroot grading of type A_{n-1}: each
// component is rooted at its maximal vertex and an inversion is a pair
// i > j with i a strict ancestor of j.
struct ForestDistribution {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_inversions;  // index = inversion count
};

inline ForestDistribution forest_inversions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  const std::size_t m = edges.size();

  ForestDistribution out;
  out.by_inversions.assign(m + 1, 0);

  std::vector<std::size_t> parent(n);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << m); ++sub) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!((sub >> e) & 1)) continue;
      auto [a, b] = edges[e];
      std::size_t ra = find(a), rb = find(b);
      if (ra == rb) {
        acyclic = false;
      } else {
        parent[ra] = rb;
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
    if (!acyclic) continue;

    // Root every component at its maximal vertex and count ancestor pairs
    // i > j, walking from the roots downward.
    std::size_t inversions = 0;
    std::vector<int> seen(n, 0);
    for (std::size_t root = n; root-- > 0;) {
      if (seen[root]) continue;
      // root is maximal in its component since we scan downward
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
      stack.push_back({root, {}});
      seen[root] = 1;
      while (!stack.empty()) {
        auto [v, ancestors] = stack.back();
        stack.pop_back();
        for (auto a : ancestors)
          if (a > v) ++inversions;
        for (auto w : adj[v]) {
          if (seen[w]) continue;
          seen[w] = 1;
          auto anc = ancestors;
          anc.push_back(v);
          stack.push_back({w, std::move(anc)});
        }
      }
    }
    out.total += 1;
    out.by_inversions[inversions] += 1;
  }
  return out;
}

}  // namespace curv::oracle

#endif
