#pragma once

#include <vector>

#include "freiman/graph.hpp"
#include "freiman/lattice.hpp"
#include "oracles.hpp"

namespace support {

using freiman::Edge;
using freiman::Int;
using freiman::SimpleGraph;

inline freiman::PointSet points(std::size_t dim, const std::vector<std::vector<Int>>& rows) {
  std::vector<freiman::ExponentVector> pts;
  for (const auto& r : rows) pts.emplace_back(r);
  return freiman::PointSet(dim, pts);
}

inline std::vector<std::vector<Int>> rows_of(const freiman::PointSet& p) {
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(p[i].begin(), p[i].end());
  return out;
}

inline std::set<oracle::Vec> as_set(const freiman::PointSet& p) {
  std::set<oracle::Vec> out;
  for (const auto& r : rows_of(p)) out.insert(r);
  return out;
}

inline SimpleGraph graph(int n, std::vector<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u, v});
  return SimpleGraph(n, std::move(e));
}

inline SimpleGraph cycle(int r) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= r; ++i) e.emplace_back(i, i % r + 1);
  return graph(r, e);
}

inline SimpleGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return graph(n, e);
}

inline SimpleGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) e.emplace_back(u, v);
  return graph(a + b, e);
}

// Cycles of lengths r1 and r2 glued at vertex 1.
inline SimpleGraph glued_cycles(int r1, int r2) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < r1; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, r1);
  int prev = 1;
  for (int i = 0; i < r2 - 1; ++i) {
    const int v = r1 + 1 + i;
    e.emplace_back(prev, v);
    prev = v;
  }
  e.emplace_back(1, prev);
  return graph(r1 + r2 - 1, e);
}

inline SimpleGraph bowtie() { return glued_cycles(3, 3); }

inline oracle::Graph to_oracle(const SimpleGraph& g) {
  oracle::Graph o{g.vertex_count(), {}};
  for (const Edge& e : g.edges()) o.second.emplace_back(e.u, e.v);
  return o;
}

inline std::vector<std::vector<Int>> generator_rows(const freiman::MonomialIdeal& i) {
  return rows_of(i.generators());
}

}  // namespace support

namespace support {

inline freiman::PointSet edge_ideal_points(const SimpleGraph& g) { return freiman::edge_ideal(g).generators(); }

}  // namespace support
