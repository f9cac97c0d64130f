#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "freiman/error.hpp"
#include "freiman/io.hpp"
#include "freiman/report.hpp"
#include "freiman/verify.hpp"

namespace {

using namespace freiman;

constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerifyFailed = 4;

std::string load(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_file(path);
}

Caps caps_from(std::optional<std::size_t> cli_cap) {
  Caps caps;
  std::optional<std::size_t> cap = cli_cap;
  if (!cap) {
    if (const char* env = std::getenv("FREIMAN_CAP")) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
        cap = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw Error("FREIMAN_CAP must be a positive integer");
      }
    }
  }
  if (cap) {
    if (*cap == 0) throw PreconditionError("the resource cap must be positive");
    caps.points = caps.cycles = caps.forests = *cap;
  }
  return caps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freiman growth of monomial ideals, edge ideals and cycle matroids"};
  app.require_subcommand(1);
  app.fallthrough();

  bool no_timing = false;
  std::optional<std::size_t> cap;
  std::string format = "json";
  app.add_flag("--no-timing", no_timing, "Omit the timing field");
  app.add_option("--cap", cap, "Resource guard for point sets, cycles and forests (env FREIMAN_CAP)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* ideal = app.add_subcommand("ideal", "Monomial ideals")->require_subcommand(1);
  auto* analyze = ideal->add_subcommand("analyze", "Fiber cone growth of a quasi-equigenerated ideal");
  std::string ideal_file;
  std::optional<Int> max_power;
  analyze->add_option("file", ideal_file, "Ideal file ('-' for stdin)")->required();
  analyze->add_option("--max-power", max_power, "Largest power K (default 4)");

  auto* graph = app.add_subcommand("graph", "Edge ideals")->require_subcommand(1);
  auto* gclassify = graph->add_subcommand("classify", "Decide whether the edge ideal is Freiman");
  std::string graph_file;
  gclassify->add_option("file", graph_file, "Graph file ('-' for stdin)")->required();

  auto* matroid = app.add_subcommand("matroid", "Cycle matroids")->require_subcommand(1);
  auto* mclassify = matroid->add_subcommand("classify", "Decide whether the matroidal ideal is Freiman");
  std::string matroid_file;
  bool hvector = false;
  mclassify->add_option("file", matroid_file, "Graph file ('-' for stdin)")->required();
  mclassify->add_flag("--hvector", hvector, "Also compute the base ring h-vector and regularity");

  auto* verify = app.add_subcommand("verify", "Check the classifiers against numeric computation");
  VerifyOptions vo;
  vo.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string mode = "exhaustive";
  bool no_graph = false, no_growth = false, no_matroid = false;
  vo.dump_dir = "counterexamples";
  std::optional<int> max_vertices;
  verify->add_option("--max-vertices", max_vertices, "Largest vertex count (default 6, or 10 in random mode)");
  verify->add_option("--max-edges", vo.max_edges, "Largest edge count (0: unlimited)")->capture_default_str();
  verify->add_option("--mode", mode, "Corpus")->check(CLI::IsMember({"exhaustive", "random"}))->capture_default_str();
  verify->add_option("--count", vo.count, "Random graphs to draw")->capture_default_str();
  verify->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
  verify->add_flag("--up-to-iso", vo.up_to_iso, "One graph per isomorphism class");
  verify->add_option("--max-power", vo.max_power, "Largest power K for growth rows")->capture_default_str();
  verify->add_option("--matroid-max-edges", vo.matroid_max_edges, "Edge limit for matroid rows")->capture_default_str();
  verify->add_option("--series-max-edges", vo.series_max_edges, "Edge limit for regularity and matroid growth rows")
      ->capture_default_str();
  verify->add_option("--jobs", vo.jobs, "Worker threads");
  verify->add_option("--dump-dir", vo.dump_dir, "Directory for counterexample graphs")->capture_default_str();
  verify->add_flag("--no-graph-checks", no_graph, "Skip edge-ideal classifier rows");
  verify->add_flag("--no-growth-checks", no_growth, "Skip growth rows");
  verify->add_flag("--no-matroid-checks", no_matroid, "Skip matroid rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  Json report;
  try {
    const Caps caps = caps_from(cap);
    if (*analyze) {
      report = ideal_analyze_report(parse_ideal(load(ideal_file)), ideal_file, max_power, caps);
    } else if (*gclassify) {
      report = graph_classify_report(parse_graph(load(graph_file)), graph_file, caps);
    } else if (*mclassify) {
      report = matroid_classify_report(parse_graph(load(matroid_file)), matroid_file, hvector, caps);
    } else if (*verify) {
      vo.mode = mode == "random" ? VerifyMode::Random : VerifyMode::Exhaustive;
      vo.max_vertices = max_vertices.value_or(vo.mode == VerifyMode::Random ? 10 : 6);
      vo.graph_checks = !no_graph;
      vo.growth_checks = !no_growth;
      vo.matroid_checks = !no_matroid;
      vo.caps = caps;
      const VerifySummary summary = run_verify(vo);
      report = verify_report(summary, vo);
      const auto paths = dump_counterexamples(summary, vo.dump_dir);
      if (!paths.empty()) report["counterexample_files"] = paths;
      if (!summary.all_passed()) status = kExitVerifyFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }

  if (!no_timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing"]["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  if (format == "table") std::cout << render_table(report);
  else std::cout << report.dump(2) << '\n';
  return status;
}
