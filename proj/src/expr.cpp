#include "conjdiam/expr.hpp"

#include <cctype>
#include <limits>

#include "conjdiam/error.hpp"

namespace conjdiam {

namespace {

[[noreturn]] void syntax_error(std::size_t token, std::size_t column, const std::string& why) {
  throw Error(ErrorCode::SyntaxError, "syntax error at token " + std::to_string(token) +
                                          " (column " + std::to_string(column + 1) + "): " + why);
}

}  // namespace

ElementExpr parse_expr(std::string_view text) {
  ElementExpr expr;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) syntax_error(1, pos, "empty expression");
  while (pos < text.size()) {
    const std::size_t number = expr.tokens.size() + 1;
    Token tok;
    tok.column = pos;
    const char c = text[pos];
    if (c != 'a' && c != 'b' && c != 'z' && c != '1')
      syntax_error(number, pos, std::string("unexpected '") + c + "'");
    tok.symbol = c;
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        syntax_error(number, pos, "expected digits after '^'");
      std::int64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
          syntax_error(number, pos, "exponent too large");
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      tok.exponent = negative ? -value : value;
    }
    expr.tokens.push_back(tok);
    skip_space();
  }
  return expr;
}

Element evaluate(const Group& g, const ElementExpr& expr) {
  Element acc = g.identity();
  for (const Token& t : expr.tokens) {
    Element base = g.identity();
    switch (t.symbol) {
      case 'a': base = g.a(); break;
      case 'b': base = g.b(); break;
      case 'z':
        if (g.spec().family != Family::Modular)
          throw Error(ErrorCode::TokenNotInFamily, "'z' is only defined for modular groups");
        base = g.z();
        break;
      default: break;
    }
    acc = g.multiply(acc, g.power(base, t.exponent));
  }
  return acc;
}

Element parse_element(std::string_view text, const Group& g) {
  return evaluate(g, parse_expr(text));
}

std::vector<Element> parse_set(std::string_view text, const Group& g) {
  std::vector<Element> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    const std::string_view item = text.substr(start, end == std::string_view::npos ? end : end - start);
    try {
      out.push_back(parse_element(item, g));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SyntaxError) throw;
      throw Error(ErrorCode::SyntaxError,
                  "set item " + std::to_string(out.size() + 1) + ": " + e.what());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_element(const Element& x) {
  std::string out;
  if (x.i != 0) out += x.i == 1 ? "a" : "a^" + std::to_string(x.i);
  if (x.j != 0) {
    if (!out.empty()) out += ' ';
    out += x.j == 1 ? "b" : "b^" + std::to_string(x.j);
  }
  return out.empty() ? "1" : out;
}

std::string format_set(const std::vector<Element>& xs) {
  std::string out;
  for (const Element& x : xs) {
    if (!out.empty()) out += " ; ";
    out += format_element(x);
  }
  return out;
}

}  // namespace conjdiam
