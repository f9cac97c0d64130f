#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freiman/exact_linalg.hpp"
#include "freiman/graph.hpp"

namespace freiman {

inline constexpr std::size_t kDefaultForestCap = 1'000'000;

/// A basis as ascending 0-based indices into SimpleGraph::edges().
using EdgeSet = std::vector<std::size_t>;

/// Cycle matroid of a graph: ground set E(G), bases the spanning forests.
struct CycleMatroid {
  SimpleGraph source;
  std::vector<EdgeSet> bases;

  std::size_t ground_size() const noexcept { return source.edge_count(); }
};

/// All spanning forests in lexicographic order, built per component and
/// combined. Throws ResourceError when the matrix-tree count exceeds `cap`.
std::vector<EdgeSet> spanning_forests(const SimpleGraph& g, std::size_t cap = kDefaultForestCap);

/// Product over components of the reduced-Laplacian determinant.
BigInt matrix_tree_count(const SimpleGraph& g);

CycleMatroid cycle_matroid(const SimpleGraph& g, std::size_t cap = kDefaultForestCap);

/// Squarefree ideal in |E(G)| variables with one generator per spanning
/// forest; equigenerated of degree n' - s.
MonomialIdeal matroidal_ideal(const SimpleGraph& g, std::size_t cap = kDefaultForestCap);

/// Articulation points, ascending.
std::vector<int> cut_vertices(const SimpleGraph& g);

/// Sum over vertices of (blocks containing v) - 1. Equals the number of cut
/// vertices when each cut vertex lies in exactly two blocks.
Int cut_vertex_excess(const SimpleGraph& g);

/// e - c - s + 1 with c = cut_vertex_excess(g) and s the number of
/// components carrying edges.
Int matroid_spread_formula(const SimpleGraph& g);

struct MatroidVerdict {
  bool freiman = false;
  Int total_cycles_bound = 0;  // e - n + s
  Int spread_formula = 0;
  Int spread_numeric = 0;
  std::optional<Int> regularity;
};

struct MatroidOptions {
  std::size_t forest_cap = kDefaultForestCap;
  std::size_t point_cap = 5'000'000;
  bool regularity = false;
};

/// Freiman exactly when G has at most one cycle. The verdict also carries
/// the numeric analytic spread of I_M for comparison with the formula.
MatroidVerdict classify_freiman_matroid(const SimpleGraph& g, const MatroidOptions& options = {});

struct BaseRingHVector {
  std::vector<Int> coefficients;  // trailing zeros trimmed when complete
  Int max_power = 0;
  bool complete = false;          // max_power reached the degree bound e - 2
};

/// h-vector of the base ring F(I_M) from the fiber cone series with
/// ell = matroid_spread_formula(G). The default series length e - 1 covers
/// the degree bound deg h <= e - 2.
BaseRingHVector base_ring_h_polynomial(const SimpleGraph& g, std::optional<Int> max_power = std::nullopt,
                                       std::size_t point_cap = 5'000'000, std::size_t forest_cap = kDefaultForestCap);

/// deg h(F(I_M)) + 1.
Int base_ring_regularity(const SimpleGraph& g, std::size_t point_cap = 5'000'000,
                         std::size_t forest_cap = kDefaultForestCap);

}  // namespace freiman
