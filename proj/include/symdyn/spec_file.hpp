#pragma once

#include "symdyn/language.hpp"
#include "symdyn/shift_space.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symdyn {

/// Construction tree of a shift space, as read from a JSON spec document. Fields not used
/// by a node's kind keep their defaults.
struct ShiftExpr {
  std::string kind;

  // full, sft, sofic
  std::vector<std::string> alphabet;
  std::vector<std::string> forbidden;  // words in the alphabet's token syntax
  std::vector<std::string> states;
  std::vector<std::array<std::string, 3>> edges;

  // beta: explicit d* or a numeric beta (polynomial coefficients, constant term first)
  std::optional<DigitWord> dstar;
  std::vector<std::int64_t> polynomial;
  std::size_t alphabet_size = 0;
  std::size_t horizon = 64;  // beta digit horizon, Sturmian certification horizon
  std::size_t precision = 256;

  // sturmian, sturmian-modulated
  std::vector<std::int64_t> partial_quotients;

  // higher-block, block-image
  std::size_t window = 1;
  std::size_t radius = 0;
  std::vector<std::array<std::string, 2>> table;  // (domain word, target token)
  std::vector<std::string> target;

  // disjoint-union, selector, star-collapse, sturmian-modulated
  std::string suffix = "'";
  std::array<std::string, 3> markers{"a", "b", "c"};
  std::vector<std::string> collapse;
  std::vector<std::string> collapse_first;
  std::string star = "*";

  /// Operands: product, disjoint-union (left, right); the others one child.
  std::vector<ShiftExpr> children;

  bool operator==(const ShiftExpr&) const = default;
};

/// Kinds accepted by parse_spec.
const std::vector<std::string>& spec_kinds();

/// Parses a JSON document. Throws ParseError (with a JSON pointer) on malformed input,
/// unknown kinds, unknown fields, or missing required fields. A numeric beta given as a
/// "value" string is normalized to its polynomial.
ShiftExpr parse_spec(const std::string& text);
ShiftExpr parse_spec_file(const std::string& path);

/// Normalized JSON text; parse_spec(emit_spec(e)) == e for parsed expressions.
std::string emit_spec(const ShiftExpr& expr);

/// Builds the described space. Construction failures surface as the library's errors.
SpacePtr build_space(const ShiftExpr& expr);

}  // namespace symdyn
