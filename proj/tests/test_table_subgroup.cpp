#include <doctest.h>

#include <algorithm>
#include <map>

#include "conjdiam/error.hpp"
#include "conjdiam/subgroup.hpp"
#include "conjdiam/table_group.hpp"

using namespace conjdiam;

namespace {

std::vector<GroupSpec> small_specs() {
  return {GroupSpec::dihedral(3),      GroupSpec::dihedral(8),     GroupSpec::semidihedral(4),
          GroupSpec::semidihedral(5),  GroupSpec::quaternion(3),   GroupSpec::quaternion(4),
          GroupSpec::modular(4, 2),    GroupSpec::modular(5, 2),   GroupSpec::modular(3, 3),
          GroupSpec::modular(3, 5),    GroupSpec::modular(4, 3)};
}

std::vector<std::uint32_t> indices(const Group& g, std::vector<Element> xs) {
  std::vector<std::uint32_t> out;
  for (const Element& x : xs) out.push_back(g.index(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("presentation table agrees with normal-form multiplication") {
  for (const GroupSpec& s : small_specs()) {
    CAPTURE(spec_label(s));
    const Group g = build_group(s);
    const TableGroup t = build_table_group(s);
    REQUIRE(t.order() == g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x)
      for (std::uint32_t y = 0; y < g.order(); ++y) REQUIRE(t.mul(x, y) == g.mul(x, y));
    CHECK(t.table() == multiplication_table(g));
  }
}

TEST_CASE("table group construction") {
  const TableGroup q3 = build_table_group(GroupSpec::quaternion(3));
  CHECK(q3.order() == 8);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y)
      for (std::uint32_t w = 0; w < 8; ++w) CHECK(q3.mul(q3.mul(x, y), w) == q3.mul(x, q3.mul(y, w)));

  const TableGroup d6 = build_table_group(GroupSpec::dihedral(3));
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_class;
  const auto ids = d6.class_ids();
  for (std::uint32_t x = 0; x < 6; ++x) by_class[ids[x]].push_back(x);
  std::vector<std::size_t> sizes;
  for (auto& [id, xs] : by_class) sizes.push_back(xs.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

  CHECK(build_table_group(GroupSpec::semidihedral(4)).order() == 16);
}

TEST_CASE("table group rejects non-groups") {
  // x*y = x is not a group (no two-sided identity).
  std::vector<std::uint32_t> left(9);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) left[x * 3 + y] = x;
  CHECK_THROWS_AS(TableGroup(3, left), Error);
  // Subtraction mod 3 has a right identity but is not associative.
  std::vector<std::uint32_t> sub(9);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y) sub[x * 3 + y] = (x + 3 - y) % 3;
  CHECK_THROWS_AS(TableGroup(3, sub), Error);
  CHECK_THROWS_AS(TableGroup(2, std::vector<std::uint32_t>{0, 1, 1}), Error);
}

TEST_CASE("table size cap") {
  const Group g = build_group(GroupSpec::modular(3, 5));
  CHECK_THROWS_AS(multiplication_table(g, 1000), Error);
  CHECK_THROWS_AS(presentation_table(g.spec(), 1000), Error);
}

TEST_CASE("cyclic table group is abelian") {
  const TableGroup c5 = cyclic_table_group(5);
  CHECK(c5.center().size() == 5);
  CHECK(c5.element_order(1) == 5);
}

TEST_CASE("generated subgroups") {
  const Group sd = build_group(GroupSpec::semidihedral(4));
  const std::vector<Element> gens{sd.power(sd.a(), 2), sd.b()};
  CHECK(subgroup_generated(sd, gens).size() == 8);
  CHECK(subgroup_generated(sd, std::vector<Element>{}).size() == 1);
  const Group m33 = build_group(GroupSpec::modular(3, 3));
  CHECK(subgroup_generated(m33, std::vector<Element>{m33.make(3)}).size() == 3);
}

TEST_CASE("normal closures") {
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  const Subgroup nb = normal_closure(sd4, std::vector<Element>{sd4.b()});
  CHECK(nb.size() == 8);
  CHECK(nb == subgroup_generated(sd4, std::vector<Element>{sd4.make(2), sd4.b()}));
  CHECK(normal_closure(sd4, std::vector<Element>{sd4.identity()}).size() == 1);
  const Group sd5 = build_group(GroupSpec::semidihedral(5));
  CHECK(normal_closure(sd5, sd5.generators()).size() == 32);
}

TEST_CASE("centers") {
  const Group m33 = build_group(GroupSpec::modular(3, 3));
  CHECK(center(m33).members() == indices(m33, {m33.make(0), m33.make(3), m33.make(6)}));
  for (const GroupSpec& s : small_specs()) {
    const Group g = build_group(s);
    CHECK(center(g).members() == build_table_group(s).center());
  }
}

TEST_CASE("maximal and Frattini subgroups") {
  const Group sd = build_group(GroupSpec::semidihedral(5));
  const auto maxes = maximal_subgroups(sd);
  CHECK(maxes.size() == 3);
  for (const Subgroup& h : maxes) {
    CHECK(h.size() == 16);
    CHECK(is_normal(sd, h));
  }
  CHECK(frattini(sd) == subgroup_generated(sd, std::vector<Element>{sd.make(2)}));

  const Group m = build_group(GroupSpec::modular(3, 5));
  CHECK(maximal_subgroups(m).size() == 6);
  CHECK(frattini(m) == center(m));

  CHECK_THROWS_AS(maximal_subgroups(build_group(GroupSpec::dihedral(3))), Error);
  CHECK(prime_of_p_group(81) == 3);
  CHECK(prime_of_p_group(12) == 0);
}

TEST_CASE("intersections") {
  const Group g = build_group(GroupSpec::semidihedral(4));
  const Subgroup x = subgroup_generated(g, std::vector<Element>{g.a()});
  const Subgroup y = subgroup_generated(g, std::vector<Element>{g.make(2), g.b()});
  CHECK(intersect(g, x, y) == subgroup_generated(g, std::vector<Element>{g.make(2)}));
}
