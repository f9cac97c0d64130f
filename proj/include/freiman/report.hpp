#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "freiman/fiber.hpp"
#include "freiman/graph.hpp"
#include "freiman/matroid.hpp"

namespace freiman {

using Json = nlohmann::ordered_json;

struct Caps {
  std::size_t points = kDefaultPointCap;
  std::size_t cycles = kDefaultCycleCap;
  std::size_t forests = kDefaultForestCap;
};

/// Reports are built completely before anything is printed, so a fatal
/// error never leaves partial output behind.
Json ideal_analyze_report(const MonomialIdeal& ideal, const std::string& source,
                          std::optional<Int> max_power, const Caps& caps);

Json graph_classify_report(const SimpleGraph& g, const std::string& source, const Caps& caps);

Json matroid_classify_report(const SimpleGraph& g, const std::string& source, bool with_h_vector,
                             const Caps& caps);

Json graph_to_json(const SimpleGraph& g);

/// Plain "key: value" rendering, nested keys joined with '.'.
std::string render_table(const Json& report);

}  // namespace freiman
