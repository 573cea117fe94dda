#include <doctest.h>

#include <algorithm>

#include "conjdiam/error.hpp"
#include "conjdiam/norm.hpp"
#include "conjdiam/table_group.hpp"

using namespace conjdiam;

namespace {

std::vector<std::uint32_t> indices(const Group& g, std::vector<Element> xs) {
  std::vector<std::uint32_t> out;
  for (const Element& x : xs) out.push_back(g.index(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> all_elements(const Group& g) {
  std::vector<Element> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) out.push_back(g.element(x));
  return out;
}

}  // namespace

TEST_CASE("conjugacy classes match the table orbits") {
  for (const GroupSpec& s : {GroupSpec::semidihedral(5), GroupSpec::quaternion(4), GroupSpec::modular(3, 5),
                             GroupSpec::dihedral(10)}) {
    const Group g = build_group(s);
    const TableGroup t = build_table_group(s);
    const ClassDecomposition cd = conjugacy_classes(g);
    CHECK(cd.members[0] == std::vector<std::uint32_t>{g.index(g.identity())});
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      CHECK(cd.members[cd.class_of[x]] == t.conjugacy_class(x));
      CHECK(cd.representative[cd.class_of[x]] <= x);
      CHECK(cd.class_of[g.inv(x)] == cd.inverse_class[cd.class_of[x]]);
    }
  }
}

TEST_CASE("conj_set") {
  const Group q3 = build_group(GroupSpec::quaternion(3));
  CHECK(conj_set(q3, std::vector<Element>{q3.a()}).members == indices(q3, {q3.make(1), q3.make(3)}));
  CHECK(conj_set(q3, std::vector<Element>{q3.identity()}).members ==
        std::vector<std::uint32_t>{q3.index(q3.identity())});
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  CHECK(conj_set(sd4, std::vector<Element>{sd4.make(2, 1)}).members ==
        indices(sd4, {sd4.make(0, 1), sd4.make(2, 1), sd4.make(4, 1), sd4.make(6, 1)}));
  CHECK_THROWS_AS(conj_set(sd4, std::vector<Element>{}), Error);
  // Inverses are included.
  const Group m = build_group(GroupSpec::modular(3, 3));
  const ConjClosedSet c = conj_set(m, std::vector<Element>{m.a()});
  CHECK(c.contains(m.index(m.inverse(m.a()))));
  CHECK(c.members.size() == 6);
}

TEST_CASE("balls") {
  const Group q3 = build_group(GroupSpec::quaternion(3));
  const std::vector<Element> s{q3.a(), q3.b()};
  CHECK(ball(q3, s, 0) == std::vector<Element>{q3.identity()});
  std::vector<std::uint32_t> b1;
  for (const Element& e : ball(q3, s, 1)) b1.push_back(q3.index(e));
  std::sort(b1.begin(), b1.end());
  auto expect = conj_set(q3, s).members;
  expect.push_back(q3.index(q3.identity()));
  std::sort(expect.begin(), expect.end());
  expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
  CHECK(b1 == expect);
}

TEST_CASE("normal generation") {
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  CHECK_FALSE(is_normally_generating(sd4, std::vector<Element>{sd4.b()}));
  CHECK(is_normally_generating(sd4, std::vector<Element>{sd4.a(), sd4.b()}));
  CHECK_FALSE(is_normally_generating(sd4, std::vector<Element>{sd4.identity()}));
}

TEST_CASE("group norms") {
  const Group m42 = build_group(GroupSpec::modular(4, 2));
  CHECK(group_norm(m42, m42.generators()) == 3);
  const Group q5 = build_group(GroupSpec::quaternion(5));
  CHECK(group_norm(q5, std::vector<Element>{q5.b(), q5.a()}) == 3);
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  CHECK(group_norm(sd4, all_elements(sd4)) == 1);
  try {
    group_norm(sd4, std::vector<Element>{sd4.b()});
    FAIL("expected NotNormallyGenerating");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormallyGenerating);
  }
  const Group q4 = build_group(GroupSpec::quaternion(4));
  CHECK(group_norm(q4, std::vector<Element>{q4.make(1, 1), q4.b()}) == 2);
  const Group sd5 = build_group(GroupSpec::semidihedral(5));
  CHECK(word_norms(sd5, std::vector<Element>{sd5.b(), sd5.a()}).at(sd5, sd5.make(3)) == 3);
}

TEST_CASE("word norms are unreachable outside the normal closure") {
  const Group sd4 = build_group(GroupSpec::semidihedral(4));
  const NormProfile pr = word_norms(sd4, std::vector<Element>{sd4.b()});
  CHECK_FALSE(pr.generates);
  CHECK(pr.at(sd4, sd4.a()) == NormProfile::kUnreachable);
  CHECK(pr.at(sd4, sd4.make(2)) != NormProfile::kUnreachable);
}

TEST_CASE("reference BFS agrees with word_norms") {
  const Group g = build_group(GroupSpec::modular(4, 3));
  const std::vector<Element> s{g.make(2, 1), g.make(3)};
  const ConjClosedSet c = conj_set(g, s);
  CHECK(bfs_distances(g, c.members) == word_norms(g, s).distance);
}
