#pragma once

#include <string>
#include <string_view>

#include "freiman/graph.hpp"
#include "freiman/ideal.hpp"

namespace freiman {

/// Parses either a monomial list ("x1^2*x3, x2*x3", separated by commas or
/// newlines) or a JSON array of exponent vectors ("[[2,0,1],[0,1,1]]").
/// The generators must already be minimal; a repeated generator or one
/// divisible by another is a ParseError.
MonomialIdeal parse_ideal(std::string_view text);

/// Parses either JSON {"n": 4, "edges": [[1,2],...]} or the line format
///   p <n> <m>
///   <u> <v>      (m lines)
/// with blank lines and lines starting with 'c' ignored.
SimpleGraph parse_graph(std::string_view text);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

/// Monomial string in the parse_ideal syntax, e.g. "x1^2*x3".
std::string format_monomial(std::span<const Int> exponent);

}  // namespace freiman
