#include "freiman/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freiman/error.hpp"

namespace freiman {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail(std::string_view text, std::size_t offset, const std::string& what) {
  const Position p = position_of(text, offset);
  throw ParseError(what, p.line, p.column);
}

std::size_t skip_space(std::string_view text, std::size_t i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

// Offsets of the elements of the JSON array opening at `open`. Only the
// structure is scanned; the document has already been validated.
std::vector<std::size_t> array_element_offsets(std::string_view text, std::size_t open) {
  std::vector<std::size_t> out;
  int depth = 0;
  bool expect_element = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (depth == 1 && expect_element && c != ']') {
      out.push_back(i);
      expect_element = false;
    }
    if (c == '"') {
      for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\') ++i;
    } else if (c == '[' || c == '{') {
      if (++depth == 1) expect_element = true;
    } else if (c == ']' || c == '}') {
      if (--depth == 0) break;
    } else if (c == ',' && depth == 1) {
      expect_element = true;
    }
  }
  return out;
}

// Offset of the value for a top-level key of the JSON object at `open`.
std::size_t object_value_offset(std::string_view text, std::size_t open, std::string_view key) {
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      const std::size_t start = i + 1;
      for (++i; i < text.size() && text[i] != '"'; ++i)
        if (text[i] == '\\') ++i;
      if (depth == 1 && text.substr(start, i - start) == key) {
        std::size_t j = skip_space(text, i + 1);
        if (j < text.size() && text[j] == ':') return skip_space(text, j + 1);
      }
    } else if (c == '[' || c == '{') {
      ++depth;
    } else if (c == ']' || c == '}') {
      --depth;
    }
  }
  return open;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    fail(text, offset, std::string("invalid JSON: ") + e.what());
  }
}

struct ParsedMonomial {
  std::vector<Int> exponent;  // grows as variables appear
  std::size_t offset = 0;
};

Int parse_number(std::string_view text, std::size_t& i, const char* what) {
  const std::size_t start = i;
  Int v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = checked_add(checked_mul(v, 10), text[i] - '0');
    ++i;
  }
  if (i == start) fail(text, start, std::string("expected ") + what);
  return v;
}

void skip_inline_space(std::string_view text, std::size_t& i) {
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
}

std::vector<ParsedMonomial> parse_monomial_list(std::string_view text) {
  std::vector<ParsedMonomial> out;
  std::size_t i = skip_space(text, 0);
  bool need_monomial = true;
  while (i < text.size()) {
    if (!need_monomial) {
      skip_inline_space(text, i);
      if (i >= text.size()) break;
      if (text[i] == ',' || text[i] == '\n') {
        const bool comma = text[i] == ',';
        i = skip_space(text, i + 1);
        need_monomial = comma || i < text.size();
        continue;
      }
      fail(text, i, std::string("unexpected character '") + text[i] + "' after monomial");
    }
    ParsedMonomial m;
    m.offset = i;
    for (;;) {
      skip_inline_space(text, i);
      if (i >= text.size() || text[i] != 'x') fail(text, i, "expected a variable x<index>");
      ++i;
      const std::size_t index_at = i;
      const Int index = parse_number(text, i, "a variable index");
      if (index < 1) fail(text, index_at, "variable indices start at 1");
      Int exponent = 1;
      skip_inline_space(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_inline_space(text, i);
        const std::size_t exp_at = i;
        exponent = parse_number(text, i, "an exponent");
        if (exponent < 1) fail(text, exp_at, "exponents must be positive");
      }
      if (static_cast<std::size_t>(index) > m.exponent.size()) m.exponent.resize(static_cast<std::size_t>(index), 0);
      m.exponent[static_cast<std::size_t>(index - 1)] = checked_add(m.exponent[static_cast<std::size_t>(index - 1)], exponent);
      skip_inline_space(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    out.push_back(std::move(m));
    need_monomial = false;
  }
  if (need_monomial) fail(text, text.size(), out.empty() ? "expected at least one monomial" : "expected a monomial after ','");
  return out;
}

std::vector<ParsedMonomial> parse_exponent_arrays(std::string_view text, std::size_t open) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_array()) fail(text, open, "expected a JSON array of exponent vectors");
  const auto offsets = array_element_offsets(text, open);
  if (doc.empty()) fail(text, open, "expected at least one exponent vector");
  std::vector<ParsedMonomial> out;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const auto& row = doc[r];
    const std::size_t at = r < offsets.size() ? offsets[r] : open;
    if (!row.is_array() || row.empty()) fail(text, at, "each exponent vector must be a nonempty array");
    if (row.size() != doc[0].size()) fail(text, at, "exponent vectors have different lengths");
    ParsedMonomial m;
    m.offset = at;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(text, at, "exponents must be integers");
      const Int value = v.get<Int>();
      if (value < 0) fail(text, at, "exponents must be nonnegative");
      m.exponent.push_back(value);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::string format_monomial(std::span<const Int> exponent) {
  std::string out;
  for (std::size_t i = 0; i < exponent.size(); ++i) {
    if (exponent[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exponent[i] > 1) out += '^' + std::to_string(exponent[i]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal parse_ideal(std::string_view text) {
  const std::size_t start = skip_space(text, 0);
  const bool json = start < text.size() && text[start] == '[';
  auto monomials = json ? parse_exponent_arrays(text, start) : parse_monomial_list(text);
  std::size_t dim = 0;
  for (const auto& m : monomials) dim = std::max(dim, m.exponent.size());
  for (auto& m : monomials) m.exponent.resize(dim, 0);

  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const auto& c = monomials[i].exponent;
    if (std::all_of(c.begin(), c.end(), [](Int v) { return v == 0; }))
      fail(text, monomials[i].offset, "the unit monomial generates the unit ideal, which is not supported");
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (i == j) continue;
      const auto& d = monomials[j].exponent;
      if (d == c && j < i) fail(text, monomials[i].offset, "repeated generator " + format_monomial(c));
      if (d != c && divides(d, c))
        fail(text, monomials[i].offset,
             "antichain violation: " + format_monomial(d) + " divides " + format_monomial(c) +
                 ", so the generators are not minimal");
    }
  }
  std::vector<ExponentVector> points;
  for (auto& m : monomials) points.emplace_back(std::move(m.exponent));
  return MonomialIdeal(PointSet(dim, points));
}

namespace {

SimpleGraph parse_graph_json(std::string_view text, std::size_t open) {
  const nlohmann::json doc = parse_json(text);
  if (!doc.is_object()) fail(text, open, "expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    fail(text, open, "missing integer field \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    fail(text, open, "missing array field \"edges\"");
  const Int n = doc["n"].get<Int>();
  if (n < 0 || n > 1'000'000) fail(text, object_value_offset(text, open, "n"), "vertex count out of range");
  const std::size_t edges_at = object_value_offset(text, open, "edges");
  const auto offsets = array_element_offsets(text, edges_at);
  std::vector<Edge> edges;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    const std::size_t at = i < offsets.size() ? offsets[i] : edges_at;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(text, at, "each edge must be a pair of integers");
    const Int u = e[0].get<Int>(), v = e[1].get<Int>();
    if (u < 1 || u > n || v < 1 || v > n)
      fail(text, at, "edge [" + std::to_string(u) + "," + std::to_string(v) + "] has a vertex outside 1.." + std::to_string(n));
    if (u == v) fail(text, at, "loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))});
    where.push_back(at);
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (edges[i] == edges[j])
        fail(text, where[i], "duplicate edge [" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "]");
  return SimpleGraph(static_cast<int>(n), std::move(edges));
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<Token> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

Int token_int(std::string_view text, const Token& t, const char* what) {
  std::size_t i = 0;
  if (t.text.empty()) fail(text, t.offset, std::string("expected ") + what);
  Int v = 0;
  for (; i < t.text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) fail(text, t.offset + i, std::string("expected ") + what);
    v = checked_add(checked_mul(v, 10), t.text[i] - '0');
  }
  return v;
}

SimpleGraph parse_graph_lines(std::string_view text) {
  std::optional<Int> n, m;
  std::vector<Edge> edges;
  std::vector<std::size_t> where;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    auto tokens = split_tokens(text, line_start, line_end);
    if (!tokens.empty() && tokens[0].text[0] != 'c') {
      if (!n) {
        if (tokens[0].text != "p") fail(text, tokens[0].offset, "expected header 'p <n> <m>'");
        if (tokens.size() != 3) fail(text, tokens[0].offset, "header must be 'p <n> <m>'");
        n = token_int(text, tokens[1], "a vertex count");
        m = token_int(text, tokens[2], "an edge count");
        if (*n > 1'000'000) fail(text, tokens[1].offset, "vertex count out of range");
      } else {
        if (tokens.size() != 2) fail(text, tokens[0].offset, "edge lines must be '<u> <v>'");
        const Int u = token_int(text, tokens[0], "a vertex label");
        const Int v = token_int(text, tokens[1], "a vertex label");
        if (u < 1 || u > *n) fail(text, tokens[0].offset, "vertex " + std::to_string(u) + " outside 1.." + std::to_string(*n));
        if (v < 1 || v > *n) fail(text, tokens[1].offset, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(*n));
        if (u == v) fail(text, tokens[0].offset, "loop at vertex " + std::to_string(u));
        const Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        for (const Edge& seen : edges)
          if (seen == e) fail(text, tokens[0].offset, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        edges.push_back(e);
        where.push_back(tokens[0].offset);
      }
    }
    line_start = line_end + 1;
  }
  if (!n) fail(text, text.size(), "missing header 'p <n> <m>'");
  if (static_cast<Int>(edges.size()) != *m)
    fail(text, text.size(), "header declares " + std::to_string(*m) + " edges but " + std::to_string(edges.size()) + " were given");
  return SimpleGraph(static_cast<int>(*n), std::move(edges));
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  const std::size_t start = skip_space(text, 0);
  if (start < text.size() && text[start] == '{') return parse_graph_json(text, start);
  return parse_graph_lines(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace freiman
