#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

/// One factor of an element expression: a generator symbol and an exponent.
struct Token {
  char symbol = '1';  // 'a', 'b', 'z' or '1'
  std::int64_t exponent = 1;
  std::size_t column = 0;  // 0-based offset in the source text
};

/// Word over a, b, z, 1 with integer exponents, e.g. "a^3 b", "a^-1 b^2", "z a".
struct ElementExpr {
  std::vector<Token> tokens;
};

/// Throws SyntaxError, annotated with the 1-based token number and column.
ElementExpr parse_expr(std::string_view text);

/// Evaluates left to right in g; TokenNotInFamily for z outside Modular.
Element evaluate(const Group& g, const ElementExpr& expr);

Element parse_element(std::string_view text, const Group& g);

/// Elements separated by ';', e.g. "b ; a^3".  Empty items are SyntaxErrors.
std::vector<Element> parse_set(std::string_view text, const Group& g);

/// Canonical text: "1", "a^3", "b", "a b^2", "a^5 b".  Parses back to x.
std::string format_element(const Element& x);
std::string format_set(const std::vector<Element>& xs);

}  // namespace conjdiam
