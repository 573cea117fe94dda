#include <doctest.h>

#include <string>

#include "conjdiam/error.hpp"
#include "conjdiam/expr.hpp"

using namespace conjdiam;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorCode::InvalidSpec, "");
}

}  // namespace

TEST_CASE("parse elements") {
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  CHECK(parse_element("a^3 b", sd4) == Element{3, 1});
  CHECK(parse_element("b a b", sd4) == Element{3, 0});
  CHECK(parse_element("1", sd4) == sd4.identity());
  CHECK(parse_element("a^-1", sd4) == Element{7, 0});
  CHECK(parse_element("a^+2b", sd4) == Element{2, 1});
  CHECK(parse_element("  a^10  ", sd4) == Element{2, 0});
  const Group m33 = build_group(GroupSpec::modular(3, 3));
  CHECK(parse_element("z a", m33) == Element{4, 0});
  CHECK(parse_element("a^-1 b^2", m33) == Element{8, 2});
}

TEST_CASE("syntax errors name the token") {
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  const Error e = error_of([&] { parse_element("c^2", sd4); });
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(std::string(e.what()).find("token 1") != std::string::npos);
  const Error e2 = error_of([&] { parse_element("a b^", sd4); });
  CHECK(e2.code() == ErrorCode::SyntaxError);
  CHECK(std::string(e2.what()).find("token 2") != std::string::npos);
  CHECK(error_of([&] { parse_element("", sd4); }).code() == ErrorCode::SyntaxError);
  CHECK(error_of([&] { parse_element("a^99999999999999999999", sd4); }).code() == ErrorCode::SyntaxError);
}

TEST_CASE("z only exists in the modular family") {
  const Group q = build_group(GroupSpec::quaternion(3));
  CHECK(error_of([&] { parse_element("z a", q); }).code() == ErrorCode::TokenNotInFamily);
}

TEST_CASE("sets") {
  const Group q4 = build_group(GroupSpec::quaternion(4));
  CHECK(parse_set("b ; a", q4) == std::vector<Element>{{0, 1}, {1, 0}});
  CHECK(parse_set("a^3", q4) == std::vector<Element>{{3, 0}});
  CHECK(error_of([&] { parse_set("a ; ; b", q4); }).code() == ErrorCode::SyntaxError);
  CHECK(format_set({{0, 1}, {1, 0}}) == "b ; a");
}

TEST_CASE("formatting") {
  CHECK(format_element({0, 0}) == "1");
  CHECK(format_element({3, 0}) == "a^3");
  CHECK(format_element({0, 1}) == "b");
  CHECK(format_element({1, 2}) == "a b^2");
  CHECK(format_element({5, 1}) == "a^5 b");
}

TEST_CASE("round trip") {
  for (const GroupSpec& s : {GroupSpec::semidihedral(6), GroupSpec::quaternion(5), GroupSpec::modular(3, 7),
                             GroupSpec::dihedral(10)}) {
    const Group g = build_group(s);
    for (std::uint32_t x = 0; x < g.order(); ++x)
      REQUIRE(parse_element(format_element(g.element(x)), g) == g.element(x));
  }
}
