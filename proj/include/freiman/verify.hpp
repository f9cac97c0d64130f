#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "freiman/graph.hpp"
#include "freiman/report.hpp"

namespace freiman {

enum class VerifyMode { Exhaustive, Random };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  int max_vertices = 6;
  int max_edges = 0;               // 0: no limit on the corpus
  std::size_t count = 200;         // random mode
  std::uint64_t seed = 1;
  bool up_to_iso = false;
  Int max_power = 4;
  int matroid_max_edges = 10;      // matroid rows only on graphs this small
  int series_max_edges = 7;        // regularity and matroid growth rows
  bool graph_checks = true;
  bool growth_checks = true;
  bool matroid_checks = true;
  Caps caps;
  unsigned jobs = 1;
  std::string dump_dir;            // counterexample graphs land here when set
};

struct CheckRow {
  std::string name;
  std::string description;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct Counterexample {
  std::string check;
  std::string instance;  // "n=<n> mask=<m>" or "random #<i>"
  SimpleGraph graph;
  std::string detail;
};

struct VerifySummary {
  std::uint64_t instances = 0;
  std::uint64_t resource_skips = 0;
  std::vector<CheckRow> rows;
  std::vector<Counterexample> counterexamples;

  bool all_passed() const;
  const CheckRow& row(const std::string& name) const;
};

/// Calls fn(n, mask, graph) for every connected graph on exactly n vertices
/// with at least one edge, in increasing mask order. Bit i of the mask is
/// the i-th pair of (1,2), (1,3), ..., (n-1,n).
void for_each_connected_graph(int n, int max_edges, bool up_to_iso,
                              const std::function<void(std::uint64_t, const SimpleGraph&)>& fn);

SimpleGraph graph_from_mask(int n, std::uint64_t mask);

/// Graph on 2..max_vertices vertices with 1..max_edges distinct edges drawn
/// uniformly; the result need not be connected.
SimpleGraph random_graph(std::mt19937_64& rng, int max_vertices, int max_edges);

/// Uniform draw from [0, bound) by rejection, independent of the standard
/// library's distribution implementations.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

VerifySummary run_verify(const VerifyOptions& options);

Json verify_report(const VerifySummary& summary, const VerifyOptions& options);

/// Writes one graph JSON file per counterexample; returns the paths.
std::vector<std::string> dump_counterexamples(const VerifySummary& summary, const std::string& dir);

}  // namespace freiman
