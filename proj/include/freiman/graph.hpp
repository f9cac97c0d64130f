#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freiman/ideal.hpp"

namespace freiman {

/// Undirected edge {u, v} with u < v; vertices are labeled 1..n.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on [n]. Edges are stored sorted lexicographically,
/// which fixes the edge indexing e_1..e_m used by cycle matroids.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws PreconditionError on loops, repeated edges or labels outside 1..n.
  SimpleGraph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u * (n_ + 1) + v)] != 0; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;
};

/// A connected component with at least one edge. `vertices` holds the
/// original labels in ascending order; `graph` is the component relabeled
/// 1..k in that order.
struct Component {
  std::vector<int> vertices;
  SimpleGraph graph;
};

/// Bipartition of all n vertices; within each component the side holding
/// the smallest label is `left`.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Simple cycle as a vertex sequence, canonicalized: smallest vertex first,
/// then its smaller cycle neighbor.
struct Cycle {
  std::vector<int> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool is_even() const noexcept { return vertices.size() % 2 == 0; }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Squarefree quadratic ideal in n variables with one generator per edge,
/// carrying the witness (1,...,1), degree 2.
MonomialIdeal edge_ideal(const SimpleGraph& g);

/// Components with at least one edge, ordered by smallest vertex label.
/// Isolated vertices are ignored.
std::vector<Component> components(const SimpleGraph& g);

/// True when all edges lie in a single component.
bool is_connected(const SimpleGraph& g);

/// e - n + s over the non-isolated part of the graph.
Int cyclomatic_number(const SimpleGraph& g);

std::optional<Bipartition> is_bipartite(const SimpleGraph& g);

/// Every simple cycle exactly once. Throws ResourceError past `cap` cycles.
std::vector<Cycle> enumerate_simple_cycles(const SimpleGraph& g, std::size_t cap = kDefaultCycleCap);

/// The edge ring K[G] is a polynomial ring: every component has at most one
/// cycle, and that cycle is odd.
bool is_polynomial_edge_ring(const SimpleGraph& g);

/// Subgraph on the same vertex labels whose edges are the edges of all
/// 4-cycles of g.
SimpleGraph four_cycle_union_subgraph(const SimpleGraph& g);

/// Sizes (2, s) with s >= 2 when the non-isolated part of h is the complete
/// bipartite graph K_{2,s}.
std::optional<int> complete_bipartite_two_side(const SimpleGraph& h);

enum class WalkType { EvenCycle = 1, OddCyclesSharingVertex = 2, DisjointOddCycles = 3 };

/// Certificate for a primitive even closed walk of length > 4.
struct LongWalkWitness {
  WalkType type;
  std::vector<Cycle> cycles;
};

/// For connected g: an even cycle of length >= 6, two odd cycles with
/// exactly one common vertex, or two vertex-disjoint odd cycles.
std::optional<LongWalkWitness> has_long_primitive_even_walk(const SimpleGraph& g,
                                                            std::size_t cap = kDefaultCycleCap);

enum class GraphReason { NoPrimitiveWalks, K2sWithShortWalks, WitnessLongWalk, ComponentRule };

std::string_view to_string(GraphReason r);
std::string_view to_string(WalkType t);

struct GraphWitness {
  std::string detail;
  std::optional<LongWalkWitness> walk;
  std::optional<SimpleGraph> four_cycle_union;
  std::vector<std::size_t> components;  // indices into components(g)
};

struct GraphVerdict {
  bool freiman = false;
  GraphReason reason = GraphReason::NoPrimitiveWalks;
  std::optional<GraphWitness> witness;
};

/// Combinatorial Freiman test for edge ideals. Connected graphs use the
/// 4-cycle union / long-walk criterion (bipartite ones the tree-attachment
/// criterion first); disconnected graphs require every component Freiman
/// and all but at most one with a polynomial edge ring.
GraphVerdict classify_freiman_graph(const SimpleGraph& g, std::size_t cap = kDefaultCycleCap);

/// The 4-cycle union / long-walk criterion alone, for connected g.
GraphVerdict classify_connected_general(const SimpleGraph& g, std::size_t cap = kDefaultCycleCap);

/// Tree-attachment criterion for connected bipartite g: g is a tree, or
/// its 4-cycle union H is K_{2,s} and the remaining edges form trees each
/// meeting V(H) in at most one vertex. Empty when g is not connected
/// bipartite.
std::optional<bool> classify_bipartite_structural(const SimpleGraph& g);

}  // namespace freiman
