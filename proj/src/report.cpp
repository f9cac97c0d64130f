#include "freiman/report.hpp"

#include <sstream>

#include "freiman/error.hpp"
#include "freiman/io.hpp"

namespace freiman {

namespace {

Json edges_json(const SimpleGraph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

Json cycle_json(const Cycle& c) { return Json(c.vertices); }

Json walk_json(const LongWalkWitness& w) {
  Json out;
  out["type"] = std::string(to_string(w.type));
  out["cycles"] = Json::array();
  for (const Cycle& c : w.cycles) out["cycles"].push_back(cycle_json(c));
  return out;
}

Json growth_rows_json(const GrowthReport& r) {
  Json rows = Json::array();
  for (const GrowthRow& row : r.rows) {
    Json j;
    j["k"] = row.k;
    j["mu"] = row.mu;
    j["bound"] = row.bound;
    j["equality"] = row.equality;
    j["h_partial_sum"] = row.partial_sum;
    j["partial_sum_nonnegative"] = row.nonnegative;
    rows.push_back(std::move(j));
  }
  return rows;
}

Json profile_json(const FiberProfile& p) {
  Json j;
  j["analytic_spread"] = p.ell;
  j["mu_series"] = p.mu_series;
  j["h"] = p.h_partial;
  j["bound2"] = p.bound2;
  j["h2"] = p.h2;
  j["freiman"] = p.freiman;
  return j;
}

}  // namespace

Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["n"] = g.vertex_count();
  j["edges"] = edges_json(g);
  return j;
}

Json ideal_analyze_report(const MonomialIdeal& parsed, const std::string& source,
                          std::optional<Int> max_power, const Caps& caps) {
  const MonomialIdeal ideal = with_witness(parsed);
  const Witness& w = *ideal.witness();
  const Int K = max_power.value_or(4);
  if (K < 2) throw PreconditionError("--max-power must be at least 2");

  const auto mu = mu_series(ideal, K, caps.points);
  const Int ell = analytic_spread(ideal);
  const GrowthReport growth = growth_report_from_series(mu, ell);
  const Int h2 = growth.h[2];
  const bool freiman = h2 == 0;

  Json j;
  j["command"] = "ideal analyze";
  j["input"]["source"] = source;
  j["input"]["ambient_dim"] = ideal.ambient_dim();
  j["input"]["mu"] = ideal.mu();
  Json gens = Json::array();
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) gens.push_back(format_monomial(ideal.generators()[i]));
  j["input"]["generators"] = gens;
  j["witness"]["weights"] = w.weights;
  j["witness"]["degree"] = w.degree;
  j["analytic_spread"] = ell;
  j["freiman"] = freiman;
  j["bound2"] = growth.rows.front().bound;
  j["h2"] = h2;
  j["series"]["max_power"] = K;
  j["series"]["mu"] = mu;
  j["series"]["h"] = growth.h;
  j["series"]["h_complete"] = false;
  j["series"]["h_beyond_max_power"] = "unknown";
  j["growth"] = growth_rows_json(growth);

  bool all_equal = true;
  for (const GrowthRow& row : growth.rows) all_equal = all_equal && row.equality;
  bool tail_zero = true;
  for (std::size_t i = 2; i < growth.h.size(); ++i) tail_zero = tail_zero && growth.h[i] == 0;
  Json& eq = j["equivalent_conditions"];
  eq["mu2_equals_bound"] = freiman;
  eq["h2_zero"] = h2 == 0;
  eq["equality_for_all_computed_k"] = all_equal;
  eq["h_vanishes_beyond_degree_1_computed"] = tail_zero;
  const char* implied = freiman ? "implied" : "excluded";
  eq["fiber_cone_cohen_macaulay_minimal_multiplicity"] = implied;
  eq["fiber_cone_regularity_at_most_1"] = implied;
  eq["defining_ideal_2_linear_resolution"] = implied;
  return j;
}

Json graph_classify_report(const SimpleGraph& g, const std::string& source, const Caps& caps) {
  const GraphVerdict v = classify_freiman_graph(g, caps.cycles);
  const MonomialIdeal ideal = edge_ideal(g);
  const FiberProfile p = is_freiman(ideal, caps.points);

  Json j;
  j["command"] = "graph classify";
  j["input"]["source"] = source;
  j["input"]["n"] = g.vertex_count();
  j["input"]["edges"] = edges_json(g);
  j["freiman"] = v.freiman;
  j["reason"] = std::string(to_string(v.reason));
  if (v.witness) {
    Json wj;
    wj["detail"] = v.witness->detail;
    if (v.witness->walk) wj["walk"] = walk_json(*v.witness->walk);
    if (v.witness->four_cycle_union) wj["four_cycle_union_edges"] = edges_json(*v.witness->four_cycle_union);
    if (!v.witness->components.empty()) wj["components"] = v.witness->components;
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  Json& s = j["structure"];
  const auto comps = components(g);
  s["components"] = comps.size();
  s["connected"] = comps.size() == 1;
  s["bipartite"] = is_bipartite(g).has_value();
  s["cyclomatic_number"] = cyclomatic_number(g);
  s["polynomial_edge_ring"] = is_polynomial_edge_ring(g);
  if (comps.size() == 1) s["four_cycle_union_edges"] = edges_json(four_cycle_union_subgraph(g));
  j["numeric"] = profile_json(p);
  j["agreement"] = p.freiman == v.freiman;
  return j;
}

Json matroid_classify_report(const SimpleGraph& g, const std::string& source, bool with_h_vector,
                             const Caps& caps) {
  MatroidOptions opt;
  opt.forest_cap = caps.forests;
  opt.point_cap = caps.points;
  opt.regularity = false;
  const CycleMatroid m = cycle_matroid(g, caps.forests);
  const MatroidVerdict v = classify_freiman_matroid(g, opt);
  const MonomialIdeal ideal = matroidal_ideal(g, caps.forests);
  const FiberProfile p = is_freiman(ideal, caps.points);

  Json j;
  j["command"] = "matroid classify";
  j["input"]["source"] = source;
  j["input"]["n"] = g.vertex_count();
  j["input"]["edges"] = edges_json(g);
  j["matroid"]["ground_size"] = m.ground_size();
  j["matroid"]["rank"] = m.bases.front().size();
  j["matroid"]["basis_count"] = m.bases.size();
  j["matroid"]["matrix_tree_count"] = matrix_tree_count(g).str();
  Json bases = Json::array();
  for (const EdgeSet& b : m.bases) {
    std::vector<std::size_t> one_based;
    for (std::size_t e : b) one_based.push_back(e + 1);
    bases.push_back(one_based);
  }
  j["matroid"]["bases"] = bases;
  j["freiman"] = v.freiman;
  j["total_cycles"] = v.total_cycles_bound;
  j["cut_vertices"] = cut_vertices(g);
  j["components"] = components(g).size();
  j["analytic_spread"]["formula"] = v.spread_formula;
  j["analytic_spread"]["numeric"] = v.spread_numeric;
  std::optional<BaseRingHVector> h;
  if (with_h_vector) h = base_ring_h_polynomial(g, std::nullopt, caps.points, caps.forests);
  if (h) j["regularity"] = static_cast<Int>(h->coefficients.size());
  else j["regularity"] = nullptr;
  j["numeric"] = profile_json(p);
  j["agreement"]["freiman"] = p.freiman == v.freiman;
  j["agreement"]["analytic_spread"] = v.spread_formula == v.spread_numeric;
  if (h) {
    j["h_vector"]["coefficients"] = h->coefficients;
    j["h_vector"]["max_power"] = h->max_power;
    j["h_vector"]["complete"] = h->complete;
  }
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream out;
  flatten(report, "", out);
  return out.str();
}

}  // namespace freiman
