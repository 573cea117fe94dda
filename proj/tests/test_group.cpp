#include <doctest.h>

#include "conjdiam/error.hpp"
#include "conjdiam/group.hpp"

using namespace conjdiam;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("specs validate and report their order") {
  CHECK(group_order(GroupSpec::semidihedral(4)) == 16);
  CHECK(group_order(GroupSpec::quaternion(3)) == 8);
  CHECK(group_order(GroupSpec::modular(3, 7)) == 343);
  CHECK(group_order(GroupSpec::dihedral(5)) == 10);
  CHECK(code_of([] { validate(GroupSpec::modular(3, 2)); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { validate(GroupSpec::modular(3, 4)); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { validate(GroupSpec::modular(2, 3)); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { validate(GroupSpec::semidihedral(3)); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { validate(GroupSpec::quaternion(2)); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([] { validate(GroupSpec::dihedral(2)); }) == ErrorCode::InvalidSpec);
  CHECK_NOTHROW(validate(GroupSpec::modular(3, 3)));
}

TEST_CASE("order cap") {
  CHECK(code_of([] { build_group(GroupSpec::modular(4, 7), 1000); }) == ErrorCode::OrderCapExceeded);
  CHECK(build_group(GroupSpec::modular(4, 7), 2401).order() == 2401);
}

TEST_CASE("labels and family names") {
  CHECK(spec_label(GroupSpec::semidihedral(5)) == "SD_5");
  CHECK(spec_label(GroupSpec::modular(4, 2)) == "M_4(2)");
  CHECK(spec_label(GroupSpec::dihedral(6)) == "D_12");
  CHECK(parse_family("sd") == Family::Semidihedral);
  CHECK(parse_family("Quaternion") == Family::Quaternion);
  CHECK(parse_family("m") == Family::Modular);
  CHECK(code_of([] { parse_family("x"); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("SD_n and Q_n products of two b-elements") {
  const Group sd = build_group(GroupSpec::semidihedral(4));
  CHECK(sd.multiply(sd.make(1, 1), sd.make(3, 1)) == Element{2, 0});
  const Group q = build_group(GroupSpec::quaternion(4));
  CHECK(q.multiply(q.make(1, 1), q.make(3, 1)) == Element{2, 0});
  // General forms a^{m1} b a^{m2} b.
  for (std::int64_t n : {4, 5, 6}) {
    const Group g = build_group(GroupSpec::semidihedral(n));
    const std::int64_t h = ipow(2, n - 2);
    for (std::int64_t m1 = 0; m1 < g.ord_a(); ++m1)
      for (std::int64_t m2 = 0; m2 < g.ord_a(); ++m2)
        CHECK(g.multiply(g.make(m1, 1), g.make(m2, 1)) == g.make(m1 - m2 + h * m2));
  }
  for (std::int64_t n : {3, 4, 5}) {
    const Group g = build_group(GroupSpec::quaternion(n));
    const std::int64_t h = ipow(2, n - 2);
    for (std::int64_t m1 = 0; m1 < g.ord_a(); ++m1)
      for (std::int64_t m2 = 0; m2 < g.ord_a(); ++m2)
        CHECK(g.multiply(g.make(m1, 1), g.make(m2, 1)) == g.make(m1 - m2 + h));
  }
}

TEST_CASE("identity and inverses") {
  const Group m33 = build_group(GroupSpec::modular(3, 3));
  CHECK(m33.inverse(m33.make(1, 1)) == Element{5, 2});
  CHECK(m33.inverse(m33.identity()) == m33.identity());
  const Group sd = build_group(GroupSpec::semidihedral(4));
  const Element inv = sd.inverse(sd.make(2, 1));
  CHECK(inv.j == 1);
  CHECK(inv.i % 2 == 0);
  for (const GroupSpec& s : {GroupSpec::dihedral(7), GroupSpec::quaternion(5), GroupSpec::modular(4, 3)}) {
    const Group g = build_group(s);
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.index(g.identity())) == x);
      CHECK(g.mul(x, g.inv(x)) == g.index(g.identity()));
    }
  }
}

TEST_CASE("powers and element orders") {
  const Group m42 = build_group(GroupSpec::modular(4, 2));
  CHECK(m42.power(m42.make(1, 1), 2) == Element{6, 0});
  CHECK(m42.order_of(m42.make(1, 1)) == 8);
  CHECK(m42.power(m42.make(3, 1), 0) == m42.identity());
  const Group m33 = build_group(GroupSpec::modular(3, 3));
  CHECK(m33.power(m33.make(1, 1), 3) == Element{3, 0});
  const Group q3 = build_group(GroupSpec::quaternion(3));
  CHECK(q3.order_of(q3.b()) == 4);
  CHECK(q3.order_of(q3.identity()) == 1);
  // Negative powers are inverses of positive ones.
  const Group sd = build_group(GroupSpec::semidihedral(5));
  for (std::uint32_t x = 0; x < sd.order(); ++x) {
    const Element e = sd.element(x);
    CHECK(sd.power(e, -3) == sd.inverse(sd.power(e, 3)));
  }
}

TEST_CASE("conjugation") {
  for (auto [n, p] : {std::pair{3, 3}, {4, 2}, {3, 5}, {5, 2}}) {
    const Group g = build_group(GroupSpec::modular(n, p));
    CHECK(g.conjugate(g.a(), g.b()) == g.multiply(g.z(), g.a()));
  }
  const Group q = build_group(GroupSpec::quaternion(5));
  for (std::int64_t m = 0; m < q.ord_a(); ++m) CHECK(q.conjugate(q.make(m), q.b()) == q.make(-m));
  const Group d = build_group(GroupSpec::dihedral(9));
  for (std::uint32_t x = 0; x < d.order(); ++x)
    CHECK(d.conjugate(d.element(x), d.identity()) == d.element(x));
  CHECK(d.commutator(d.a(), d.a()) == d.identity());
}

TEST_CASE("make reduces arbitrary exponents") {
  const Group q = build_group(GroupSpec::quaternion(3));
  CHECK(q.make(0, 2) == Element{2, 0});  // b^2 = a^2
  CHECK(q.make(0, -1) == q.inverse(q.b()));
  const Group m = build_group(GroupSpec::modular(3, 3));
  CHECK(m.make(-1, 0) == Element{8, 0});
  CHECK(m.make(0, 4) == Element{0, 1});
}

TEST_CASE("mutation hooks change the product") {
  const Group g = build_group(GroupSpec::semidihedral(4));
  const Group bad = g.with_twist_override(1);
  CHECK(bad.multiply(bad.b(), bad.a()) != g.multiply(g.b(), g.a()));
  const Group q = build_group(GroupSpec::quaternion(3));
  CHECK(q.with_fold_override(0).power(q.b(), 2) == q.identity());
  const Group shifted = g.with_product_shift(1);
  CHECK(shifted.multiply(shifted.identity(), shifted.identity()) != shifted.identity());
}
