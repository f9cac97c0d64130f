#include "freiman/matroid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "freiman/error.hpp"
#include "freiman/fiber.hpp"

namespace freiman {

namespace {

// Union-find with rollback: union by size, no path compression.
class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

// Spanning trees of one component, as ascending original edge indices.
std::vector<EdgeSet> spanning_trees(const SimpleGraph& g, const std::vector<std::size_t>& edge_ids,
                                    std::size_t vertex_count) {
  const std::size_t need = vertex_count - 1;
  RollbackSets sets(static_cast<std::size_t>(g.vertex_count()) + 1);
  std::vector<EdgeSet> out;
  EdgeSet chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t idx) {
    if (chosen.size() == need) {
      out.push_back(chosen);
      return;
    }
    if (edge_ids.size() - idx < need - chosen.size()) return;
    const Edge& e = g.edges()[edge_ids[idx]];
    if (sets.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
      chosen.push_back(edge_ids[idx]);
      walk(idx + 1);
      chosen.pop_back();
      sets.undo();
    }
    walk(idx + 1);
  };
  walk(0);
  return out;
}

BigInt component_tree_count(const SimpleGraph& comp) {
  const int k = comp.vertex_count();
  if (k <= 1) return 1;
  IntMatrix laplacian(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1));
  for (int v = 1; v < k; ++v) {
    laplacian(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1)) = comp.degree(v);
    for (int w : comp.neighbors(v))
      if (w < k) laplacian(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(w - 1)) = -1;
  }
  return exact_determinant(laplacian);
}

}  // namespace

BigInt matrix_tree_count(const SimpleGraph& g) {
  BigInt total = 1;
  for (const auto& comp : components(g)) total *= component_tree_count(comp.graph);
  return total;
}

std::vector<EdgeSet> spanning_forests(const SimpleGraph& g, std::size_t cap) {
  if (g.edge_count() == 0) throw PreconditionError("spanning forests of an edgeless graph");
  const auto comps = components(g);
  const BigInt expected = matrix_tree_count(g);
  if (expected > cap) throw ResourceError("spanning forest count " + expected.str() + " exceeds the cap of " + std::to_string(cap));

  std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c].vertices) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::vector<std::vector<std::size_t>> edge_ids(comps.size());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    edge_ids[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(g.edges()[i].u)])].push_back(i);

  std::vector<EdgeSet> forests{EdgeSet{}};
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto trees = spanning_trees(g, edge_ids[c], comps[c].vertices.size());
    if (BigInt(trees.size()) != component_tree_count(comps[c].graph))
      throw std::logic_error("spanning tree enumeration disagrees with the matrix-tree count");
    std::vector<EdgeSet> next;
    next.reserve(forests.size() * trees.size());
    for (const auto& f : forests)
      for (const auto& t : trees) {
        EdgeSet combined = f;
        combined.insert(combined.end(), t.begin(), t.end());
        std::sort(combined.begin(), combined.end());
        next.push_back(std::move(combined));
      }
    forests = std::move(next);
  }
  std::sort(forests.begin(), forests.end());
  return forests;
}

CycleMatroid cycle_matroid(const SimpleGraph& g, std::size_t cap) {
  return CycleMatroid{g, spanning_forests(g, cap)};
}

MonomialIdeal matroidal_ideal(const SimpleGraph& g, std::size_t cap) {
  const auto forests = spanning_forests(g, cap);
  const std::size_t m = g.edge_count();
  std::vector<Int> rows(forests.size() * m, 0);
  for (std::size_t r = 0; r < forests.size(); ++r)
    for (std::size_t i : forests[r]) rows[r * m + i] = 1;
  const Int degree = static_cast<Int>(forests.front().size());
  return MonomialIdeal(PointSet::from_rows(m, std::move(rows)), Witness{std::vector<Int>(m, 1), degree});
}

namespace {

// Number of blocks (maximal 2-connected subgraphs and bridges) containing
// each vertex, index 0 unused.
std::vector<Int> blocks_per_vertex(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> order(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
  std::vector<std::size_t> next_child(n + 1, 0);
  std::vector<Int> blocks(n + 1, 0);
  int clock = 0;
  for (int root = 1; root <= g.vertex_count(); ++root) {
    if (order[static_cast<std::size_t>(root)] != 0 || g.degree(root) == 0) continue;
    std::vector<int> stack{root};
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++clock;
    while (!stack.empty()) {
      const int v = stack.back();
      const auto vi = static_cast<std::size_t>(v);
      const auto nbrs = g.neighbors(v);
      if (next_child[vi] < nbrs.size()) {
        const int w = nbrs[next_child[vi]++];
        const auto wi = static_cast<std::size_t>(w);
        if (order[wi] == 0) {
          parent[wi] = v;
          order[wi] = low[wi] = ++clock;
          stack.push_back(w);
        } else if (w != parent[vi]) {
          low[vi] = std::min(low[vi], order[wi]);
        }
        continue;
      }
      stack.pop_back();
      const int p = parent[vi];
      if (p == 0) continue;
      const auto pi = static_cast<std::size_t>(p);
      low[pi] = std::min(low[pi], low[vi]);
      if (low[vi] >= order[pi]) {
        ++blocks[pi];  // the subtree at v and p close a block
      }
    }
  }
  // A non-root vertex also lies in the block holding its parent edge.
  for (std::size_t v = 1; v <= n; ++v)
    if (parent[v] != 0) ++blocks[v];
  return blocks;
}

}  // namespace

std::vector<int> cut_vertices(const SimpleGraph& g) {
  const auto blocks = blocks_per_vertex(g);
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (blocks[static_cast<std::size_t>(v)] > 1) out.push_back(v);
  return out;
}

Int cut_vertex_excess(const SimpleGraph& g) {
  const auto blocks = blocks_per_vertex(g);
  Int excess = 0;
  for (int v = 1; v <= g.vertex_count(); ++v)
    excess += std::max<Int>(0, blocks[static_cast<std::size_t>(v)] - 1);
  return excess;
}

Int matroid_spread_formula(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw PreconditionError("matroid spread of an edgeless graph");
  const auto e = static_cast<Int>(g.edge_count());
  const Int c = cut_vertex_excess(g);
  const auto s = static_cast<Int>(components(g).size());
  return e - c - s + 1;
}

MatroidVerdict classify_freiman_matroid(const SimpleGraph& g, const MatroidOptions& options) {
  MatroidVerdict v;
  v.total_cycles_bound = cyclomatic_number(g);
  v.freiman = v.total_cycles_bound <= 1;
  v.spread_formula = matroid_spread_formula(g);
  v.spread_numeric = analytic_spread(matroidal_ideal(g, options.forest_cap));
  if (options.regularity) v.regularity = base_ring_regularity(g, options.point_cap, options.forest_cap);
  return v;
}

BaseRingHVector base_ring_h_polynomial(const SimpleGraph& g, std::optional<Int> max_power, std::size_t point_cap,
                                       std::size_t forest_cap) {
  const auto e = static_cast<Int>(g.edge_count());
  const Int degree_bound = e - 2;
  BaseRingHVector out;
  out.max_power = max_power.value_or(std::max<Int>(2, e - 1));
  const MonomialIdeal ideal = matroidal_ideal(g, forest_cap);
  const auto mu = mu_series(ideal, std::max<Int>(1, out.max_power), point_cap);
  out.coefficients = h_vector(std::span<const Int>(mu).first(static_cast<std::size_t>(out.max_power) + 1),
                              matroid_spread_formula(g));
  out.complete = out.max_power >= degree_bound;
  if (!out.complete) return out;
  for (std::size_t i = static_cast<std::size_t>(std::max<Int>(1, e - 1)); i < out.coefficients.size(); ++i)
    if (out.coefficients[i] != 0)
      throw std::logic_error("base ring h-vector has a nonzero entry beyond the degree bound e - 2");
  while (out.coefficients.size() > 1 && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

Int base_ring_regularity(const SimpleGraph& g, std::size_t point_cap, std::size_t forest_cap) {
  const auto h = base_ring_h_polynomial(g, std::nullopt, point_cap, forest_cap);
  return static_cast<Int>(h.coefficients.size() - 1) + 1;
}

}  // namespace freiman
