#include "freiman/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

#include "freiman/error.hpp"
#include "freiman/fiber.hpp"
#include "freiman/matroid.hpp"

namespace freiman {

namespace {

enum Check : std::size_t {
  GraphClassifier,
  BipartiteCriterion,
  PolynomialEdgeRing,
  EdgeRingDimension,
  RelabelingInvariance,
  GrowthLowerBound,
  H2Nonnegative,
  PartialSumsNonnegative,
  EqualityPropagates,
  HRoundTrip,
  SpreadUpperBound,
  MatroidClassifier,
  MatroidSpread,
  MatroidPolynomialGrowth,
  ForestCount,
  RegularityBounds,
  RestrictionMonotone,
  kCheckCount
};

struct CheckInfo {
  const char* name;
  const char* description;
};

constexpr std::array<CheckInfo, kCheckCount> kChecks{{
    {"graph-classifier-vs-numeric", "combinatorial edge-ideal verdict equals mu(I^2) == bound"},
    {"bipartite-criterion-vs-general", "tree-attachment criterion equals the 4-cycle union / long-walk criterion"},
    {"polynomial-edge-ring-growth", "no primitive even closed walk iff mu(I) equals the analytic spread, with free growth"},
    {"edge-ring-dimension", "analytic spread equals n' minus the number of bipartite components"},
    {"relabeling-invariance", "verdict unchanged under reversing the vertex labels"},
    {"growth-lower-bound", "mu(I^k) >= generalized lower bound for 2 <= k <= K"},
    {"h2-nonnegative", "h_2 >= 0"},
    {"partial-sums-nonnegative", "h-vector partial sums are nonnegative for 2 <= k <= K"},
    {"equality-propagates", "equality at k = 2 gives equality for all k <= K and h_i = 0 for i >= 2"},
    {"h-vector-round-trip", "series rebuilt from the h-vector matches"},
    {"spread-upper-bound", "analytic spread at most min(mu, ambient dimension)"},
    {"matroid-classifier-vs-numeric", "at most one cycle iff mu(I_M^2) == bound"},
    {"matroid-spread-formula", "analytic spread of I_M equals e - c - s + 1"},
    {"matroid-polynomial-growth", "Freiman base rings grow like a polynomial ring for k <= 3"},
    {"forest-count", "enumerated spanning forests match the matrix-tree count"},
    {"regularity-bounds", "non-polynomial base rings have 3 <= reg within the edge bound"},
    {"restriction-monotone", "deleting an edge of a Freiman cycle matroid keeps it Freiman"},
}};

struct Partial {
  std::array<std::array<std::uint64_t, 3>, kCheckCount> counts{};
  std::uint64_t instances = 0;
  std::uint64_t resource_skips = 0;
  std::vector<Counterexample> counterexamples;
};

constexpr std::size_t kMaxStoredCounterexamples = 50;

class Recorder {
 public:
  Recorder(Partial& p, const SimpleGraph& g, std::string id) : p_(p), g_(g), id_(std::move(id)) {}

  void expect(Check c, bool ok, const std::string& detail) {
    if (ok) {
      ++p_.counts[c][0];
      return;
    }
    ++p_.counts[c][1];
    if (p_.counterexamples.size() < kMaxStoredCounterexamples)
      p_.counterexamples.push_back({kChecks[c].name, id_, g_, detail});
  }
  void skip(Check c) { ++p_.counts[c][2]; }
  void resource_skip() { ++p_.resource_skips; }

 private:
  Partial& p_;
  const SimpleGraph& g_;
  std::string id_;
};

std::string series_text(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void growth_rows(Recorder& r, const MonomialIdeal& ideal, const std::vector<Int>& mu, Int ell,
                 const std::string& label) {
  const GrowthReport rep = growth_report_from_series(mu, ell);
  const std::string where = label + " mu=" + series_text(mu) + " ell=" + std::to_string(ell);
  bool lower = true, partial = true, all_equal = true, tail_zero = true;
  for (const GrowthRow& row : rep.rows) {
    lower = lower && row.mu >= row.bound;
    partial = partial && row.nonnegative;
    all_equal = all_equal && row.equality;
  }
  for (std::size_t i = 2; i < rep.h.size(); ++i) tail_zero = tail_zero && rep.h[i] == 0;
  r.expect(GrowthLowerBound, lower, where);
  r.expect(H2Nonnegative, rep.h[2] >= 0, where);
  r.expect(PartialSumsNonnegative, partial, where);
  const bool eq2 = rep.rows.front().equality;
  r.expect(EqualityPropagates, !eq2 || (all_equal && tail_zero), where);
  r.expect(HRoundTrip, mu_from_h(rep.h, ell) == mu, where);
  const Int cap = std::min(static_cast<Int>(ideal.mu()), static_cast<Int>(ideal.ambient_dim()));
  r.expect(SpreadUpperBound, ell >= 1 && ell <= cap, where);
}

SimpleGraph reversed(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({n + 1 - e.v, n + 1 - e.u});
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph without_edge(const SimpleGraph& g, std::size_t index) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (i != index) edges.push_back(g.edges()[i]);
  return SimpleGraph(g.vertex_count(), std::move(edges));
}

void edge_ideal_checks(const SimpleGraph& g, const VerifyOptions& o, Recorder& r) {
  const MonomialIdeal ideal = edge_ideal(g);
  const Int ell = analytic_spread(ideal);
  std::vector<Int> mu = mu_series(ideal, o.growth_checks ? std::max<Int>(o.max_power, 2) : 2, o.caps.points);
  const bool numeric = mu[2] == generalized_lower_bound(mu[1], ell, 2);
  const std::string where = "edge ideal mu=" + series_text(mu) + " ell=" + std::to_string(ell);

  if (o.graph_checks) {
    std::optional<bool> verdict;
    try {
      verdict = classify_freiman_graph(g, o.caps.cycles).freiman;
      r.expect(GraphClassifier, *verdict == numeric, where + " classifier=" + (*verdict ? "true" : "false"));
    } catch (const std::logic_error& e) {
      r.expect(GraphClassifier, false, std::string("classifier raised: ") + e.what());
    }

    if (is_connected(g) && is_bipartite(g)) {
      const auto structural = classify_bipartite_structural(g);
      const bool general = classify_connected_general(g, o.caps.cycles).freiman;
      r.expect(BipartiteCriterion, structural && *structural == general,
               std::string("structural=") + (structural && *structural ? "true" : "false") +
                   " general=" + (general ? "true" : "false"));
    } else {
      r.skip(BipartiteCriterion);
    }

    // Polynomial exactly when the generators are affinely independent; the
    // computed growth must then be that of a polynomial ring.
    const bool free = mu[1] == ell;
    bool grows_freely = true;
    for (std::size_t k = 2; k < mu.size(); ++k)
      grows_freely = grows_freely && mu[k] == binomial(mu[1] + static_cast<Int>(k) - 1, static_cast<Int>(k));
    r.expect(PolynomialEdgeRing, is_polynomial_edge_ring(g) == free && (!free || grows_freely), where);

    Int used = 0, bipartite = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) used += g.degree(v) > 0;
    for (const Component& c : components(g)) bipartite += is_bipartite(c.graph).has_value();
    r.expect(EdgeRingDimension, ell == used - bipartite, where);

    if (verdict) {
      const bool again = classify_freiman_graph(reversed(g), o.caps.cycles).freiman;
      r.expect(RelabelingInvariance, again == *verdict, "reversed labels changed the verdict");
    } else {
      r.skip(RelabelingInvariance);
    }
  }
  if (o.growth_checks) growth_rows(r, ideal, mu, ell, "edge ideal");
}

void matroid_checks(const SimpleGraph& g, const VerifyOptions& o, Recorder& r) {
  const auto e = static_cast<Int>(g.edge_count());
  const Int cyc = cyclomatic_number(g);
  const bool series_ok = e <= o.series_max_edges;

  const auto forests = spanning_forests(g, o.caps.forests);
  r.expect(ForestCount, BigInt(forests.size()) == matrix_tree_count(g),
           std::to_string(forests.size()) + " forests vs " + matrix_tree_count(g).str());

  const MonomialIdeal ideal = matroidal_ideal(g, o.caps.forests);
  const Int ell = analytic_spread(ideal);
  r.expect(MatroidSpread, ell == matroid_spread_formula(g),
           "numeric " + std::to_string(ell) + " formula " + std::to_string(matroid_spread_formula(g)));

  Int K = cyc <= 1 ? 3 : 2;
  if (o.growth_checks && series_ok) K = std::max(K, o.max_power);
  const auto mu = mu_series(ideal, K, o.caps.points);
  const bool numeric = mu[2] == generalized_lower_bound(mu[1], ell, 2);
  const std::string where = "matroidal ideal mu=" + series_text(mu) + " ell=" + std::to_string(ell);

  MatroidOptions mo;
  mo.forest_cap = o.caps.forests;
  mo.point_cap = o.caps.points;
  const MatroidVerdict v = classify_freiman_matroid(g, mo);
  r.expect(MatroidClassifier, v.freiman == numeric && v.freiman == (cyc <= 1), where);

  if (cyc <= 1) {
    bool ok = true;
    for (Int k = 1; k <= 3; ++k) ok = ok && mu[static_cast<std::size_t>(k)] == binomial(ell + k - 1, k);
    r.expect(MatroidPolynomialGrowth, ok, where);
  } else {
    r.skip(MatroidPolynomialGrowth);
  }

  if (o.growth_checks && series_ok) growth_rows(r, ideal, mu, ell, "matroidal ideal");

  if (series_ok && cyc >= 2) {
    const Int reg = base_ring_regularity(g, o.caps.points, o.caps.forests);
    const auto comps = components(g);
    const auto s = static_cast<Int>(comps.size());
    const auto c = static_cast<Int>(cut_vertices(g).size());
    const std::string detail = "reg=" + std::to_string(reg) + " e=" + std::to_string(e) + " c=" +
                               std::to_string(c) + " s=" + std::to_string(s);
    if (s == 1 && c == 0) r.expect(RegularityBounds, reg >= 3 && reg <= e - 1, detail);
    else if (s >= 2) r.expect(RegularityBounds, reg >= 3 && reg <= e - c - s, detail);
    else r.skip(RegularityBounds);
  } else {
    r.skip(RegularityBounds);
  }

  if (cyc <= 1 && e >= 2) {
    bool ok = true;
    for (std::size_t i = 0; i < g.edge_count() && ok; ++i)
      ok = is_freiman(matroidal_ideal(without_edge(g, i), o.caps.forests), o.caps.points).freiman;
    r.expect(RestrictionMonotone, ok, "an edge deletion is not Freiman");
  } else {
    r.skip(RestrictionMonotone);
  }
}

constexpr std::array<Check, 5> kGraphRows{GraphClassifier, BipartiteCriterion, PolynomialEdgeRing,
                                          EdgeRingDimension, RelabelingInvariance};
constexpr std::array<Check, 6> kMatroidRows{MatroidClassifier, MatroidSpread, MatroidPolynomialGrowth,
                                            ForestCount, RegularityBounds, RestrictionMonotone};

void check_instance(const SimpleGraph& g, const std::string& id, const VerifyOptions& o, Partial& p) {
  ++p.instances;
  Recorder r(p, g, id);
  if (o.graph_checks || o.growth_checks) {
    try {
      edge_ideal_checks(g, o, r);
    } catch (const ResourceError&) {
      r.resource_skip();
      for (Check c : kGraphRows) r.skip(c);
    }
  }
  if (o.matroid_checks) {
    if (static_cast<int>(g.edge_count()) > o.matroid_max_edges) {
      for (Check c : kMatroidRows) r.skip(c);
      return;
    }
    try {
      matroid_checks(g, o, r);
    } catch (const ResourceError&) {
      r.resource_skip();
      for (Check c : kMatroidRows) r.skip(c);
    }
  }
}

std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

// Neighbourhood bitmasks (bit v-1) of the graph encoded by `mask`.
std::array<std::uint32_t, 8> adjacency_bits(int n, std::uint64_t mask) {
  std::array<std::uint32_t, 8> adj{};
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1U) {
        adj[u] |= 1U << v;
        adj[v] |= 1U << u;
      }
  return adj;
}

bool connected_spanning(int n, const std::array<std::uint32_t, 8>& adj) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

// Smallest mask over relabelings that list vertices by non-increasing
// degree; equal for isomorphic graphs.
std::uint64_t canonical_mask(int n, const std::array<std::uint32_t, 8>& adj) {
  std::array<int, 8> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  // Class boundaries by degree.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && std::popcount(adj[order[j]]) == std::popcount(adj[order[i]])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  // Iterate over all products of within-class permutations of `order`.
  auto encode = [&] {
    std::array<int, 8> label{};
    for (int i = 0; i < n; ++i) label[order[i]] = i;
    std::uint64_t m = 0;
    for (int u = 0; u < n; ++u)
      for (std::uint32_t nb = adj[u]; nb; nb &= nb - 1) {
        const int v = std::countr_zero(nb);
        int a = label[u], b = label[v];
        if (a > b) continue;
        const int bit = a * (2 * n - a - 1) / 2 + (b - a - 1);
        m |= std::uint64_t{1} << bit;
      }
    return m;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      best = std::min(best, encode());
      return;
    }
    auto [lo, hi] = classes[c];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(c + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace

bool VerifySummary::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.failed == 0; });
}

const CheckRow& VerifySummary::row(const std::string& name) const {
  for (const CheckRow& r : rows)
    if (r.name == name) return r;
  throw PreconditionError("unknown check " + name);
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (const auto& [u, v] : pair_list(n)) {
    if (mask >> bit & 1U) edges.push_back({u, v});
    ++bit;
  }
  return SimpleGraph(n, std::move(edges));
}

namespace {

void scan_masks(int n, int max_edges, bool up_to_iso, std::uint64_t lo, std::uint64_t hi,
                const std::function<void(std::uint64_t, const SimpleGraph&)>& fn) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    if (max_edges > 0 && std::popcount(mask) > max_edges) continue;
    if (std::popcount(mask) < n - 1) continue;
    const auto adj = adjacency_bits(n, mask);
    if (!connected_spanning(n, adj)) continue;
    if (up_to_iso && canonical_mask(n, adj) != mask) continue;
    fn(mask, graph_from_mask(n, mask));
  }
}

void check_range(int n, int max_edges, bool up_to_iso) {
  if (n < 2 || n > 8) throw PreconditionError("exhaustive enumeration supports 2 to 8 vertices");
  if (n == 8 && (max_edges <= 0 || max_edges > 10))
    throw PreconditionError("8-vertex enumeration needs --max-edges of at most 10");
  (void)up_to_iso;
}

}  // namespace

void for_each_connected_graph(int n, int max_edges, bool up_to_iso,
                              const std::function<void(std::uint64_t, const SimpleGraph&)>& fn) {
  check_range(n, max_edges, up_to_iso);
  const int pairs = n * (n - 1) / 2;
  scan_masks(n, max_edges, up_to_iso, 1, std::uint64_t{1} << pairs, fn);
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty draw range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

SimpleGraph random_graph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  if (max_vertices < 2) throw PreconditionError("random graphs need at least 2 vertices");
  const int n = 2 + static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(max_vertices - 1)));
  auto pairs = pair_list(n);
  std::size_t limit = pairs.size();
  if (max_edges > 0) limit = std::min(limit, static_cast<std::size_t>(max_edges));
  const std::size_t m = 1 + bounded_draw(rng, limit);
  for (std::size_t i = 0; i < m; ++i)
    std::swap(pairs[i], pairs[i + bounded_draw(rng, pairs.size() - i)]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({pairs[i].first, pairs[i].second});
  return SimpleGraph(n, std::move(edges));
}

VerifySummary run_verify(const VerifyOptions& o) {
  if (o.max_power < 2) throw PreconditionError("max power must be at least 2");
  struct Task {
    int n = 0;
    std::uint64_t lo = 0, hi = 0;           // exhaustive mask range
    std::size_t first = 0, last = 0;        // random graph range
  };
  std::vector<Task> tasks;
  std::vector<SimpleGraph> sampled;
  if (o.mode == VerifyMode::Exhaustive) {
    constexpr std::uint64_t kChunk = 1U << 13;
    for (int n = 2; n <= o.max_vertices; ++n) {
      check_range(n, o.max_edges, o.up_to_iso);
      const std::uint64_t end = std::uint64_t{1} << (n * (n - 1) / 2);
      for (std::uint64_t lo = 1; lo < end; lo += kChunk) tasks.push_back({n, lo, std::min(end, lo + kChunk), 0, 0});
    }
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) sampled.push_back(random_graph(rng, o.max_vertices, o.max_edges));
    constexpr std::size_t kChunk = 8;
    for (std::size_t lo = 0; lo < sampled.size(); lo += kChunk)
      tasks.push_back({0, 0, 0, lo, std::min(sampled.size(), lo + kChunk)});
  }

  std::vector<Partial> partials(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      const Task& task = tasks[t];
      try {
        if (o.mode == VerifyMode::Exhaustive) {
          scan_masks(task.n, o.max_edges, o.up_to_iso, task.lo, task.hi,
                     [&](std::uint64_t mask, const SimpleGraph& g) {
                       check_instance(g, "n=" + std::to_string(task.n) + " mask=" + std::to_string(mask), o,
                                      partials[t]);
                     });
        } else {
          for (std::size_t i = task.first; i < task.last; ++i)
            check_instance(sampled[i], "random #" + std::to_string(i), o, partials[t]);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, o.jobs);
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < jobs; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerifySummary s;
  for (const CheckInfo& c : kChecks) s.rows.push_back({c.name, c.description, 0, 0, 0});
  for (const Partial& p : partials) {
    s.instances += p.instances;
    s.resource_skips += p.resource_skips;
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      s.rows[c].passed += p.counts[c][0];
      s.rows[c].failed += p.counts[c][1];
      s.rows[c].skipped += p.counts[c][2];
    }
    for (const Counterexample& ce : p.counterexamples)
      if (s.counterexamples.size() < kMaxStoredCounterexamples) s.counterexamples.push_back(ce);
  }
  return s;
}

Json verify_report(const VerifySummary& s, const VerifyOptions& o) {
  Json j;
  j["command"] = "verify";
  Json& opt = j["options"];
  opt["mode"] = o.mode == VerifyMode::Exhaustive ? "exhaustive" : "random";
  opt["max_vertices"] = o.max_vertices;
  opt["max_edges"] = o.max_edges;
  if (o.mode == VerifyMode::Random) {
    opt["count"] = o.count;
    opt["seed"] = o.seed;
  }
  opt["up_to_iso"] = o.up_to_iso;
  opt["max_power"] = o.max_power;
  opt["matroid_max_edges"] = o.matroid_max_edges;
  opt["series_max_edges"] = o.series_max_edges;
  j["instances"] = s.instances;
  j["resource_skips"] = s.resource_skips;
  Json rows = Json::array();
  for (const CheckRow& r : s.rows) {
    Json row;
    row["name"] = r.name;
    row["description"] = r.description;
    row["passed"] = r.passed;
    row["failed"] = r.failed;
    row["skipped"] = r.skipped;
    rows.push_back(std::move(row));
  }
  j["checks"] = rows;
  Json ces = Json::array();
  for (const Counterexample& c : s.counterexamples) {
    Json cj;
    cj["check"] = c.check;
    cj["instance"] = c.instance;
    cj["graph"] = graph_to_json(c.graph);
    cj["detail"] = c.detail;
    ces.push_back(std::move(cj));
  }
  j["counterexamples"] = ces;
  j["all_passed"] = s.all_passed();
  return j;
}

std::vector<std::string> dump_counterexamples(const VerifySummary& s, const std::string& dir) {
  std::vector<std::string> paths;
  if (s.counterexamples.empty()) return paths;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
    const Counterexample& c = s.counterexamples[i];
    const auto path = std::filesystem::path(dir) / (c.check + "-" + std::to_string(i + 1) + ".json");
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << graph_to_json(c.graph).dump(2) << '\n';
    paths.push_back(path.string());
  }
  return paths;
}

}  // namespace freiman
