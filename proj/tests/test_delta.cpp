#include <doctest.h>

#include <random>

#include "conjdiam/delta.hpp"
#include "conjdiam/error.hpp"
#include "conjdiam/kernels.hpp"
#include "conjdiam/norm.hpp"

using namespace conjdiam;

TEST_CASE("class pairs cover the nontrivial classes once") {
  const Group g = build_group(GroupSpec::modular(4, 3));
  const ClassDecomposition cd = conjugacy_classes(g);
  const ClassPairs cp = class_pairs(cd);
  std::vector<int> seen(cd.count(), 0);
  for (std::size_t k = 0; k < cp.count(); ++k) {
    for (std::uint32_t c : cp.classes[k]) ++seen[c];
    CHECK(cp.representative[k] == cp.members[k].front());
    CHECK(std::is_sorted(cp.members[k].begin(), cp.members[k].end()));
  }
  CHECK(seen[0] == 0);
  for (std::size_t c = 1; c < cd.count(); ++c) CHECK(seen[c] == 1);
  CHECK(class_pair_count(g) == cp.count());
}

TEST_CASE("bitset kernel matches the reference evaluator") {
  for (const GroupSpec& s : {GroupSpec::semidihedral(5), GroupSpec::quaternion(6), GroupSpec::modular(5, 2),
                             GroupSpec::modular(3, 5), GroupSpec::dihedral(10), GroupSpec::modular(3, 7)}) {
    CAPTURE(spec_label(s));
    const Group g = build_group(s);
    const ClassPairs cp = class_pairs(conjugacy_classes(g));
    const ReferenceEvaluator ref(g, cp);
    const BitsetKernel kernel(g, cp);
    const auto m = static_cast<std::uint32_t>(cp.count());
    for (std::uint32_t i = 0; i < m; ++i) {
      CHECK(kernel.evaluate(std::vector<std::uint32_t>{i}) == ref.evaluate(std::vector<std::uint32_t>{i}));
      for (std::uint32_t j = i + 1; j < m; ++j) {
        const std::vector<std::uint32_t> u{i, j};
        REQUIRE(kernel.evaluate(u) == ref.evaluate(u));
      }
    }
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
      std::vector<std::uint32_t> u;
      for (std::uint32_t i = 0; i < m; ++i)
        if (rng() % 4 == 0) u.push_back(i);
      if (u.empty()) continue;
      REQUIRE(kernel.evaluate(u) == ref.evaluate(u));
      // Incremental accumulation gives the same table as a fresh build.
      auto table = kernel.make_table();
      for (std::uint32_t p : u) kernel.accumulate(table, p);
      CHECK(kernel.run(table) == kernel.evaluate(u));
    }
  }
}

TEST_CASE("kernel values are the BFS norms") {
  const Group g = build_group(GroupSpec::quaternion(5));
  const ClassPairs cp = class_pairs(conjugacy_classes(g));
  const BitsetKernel kernel(g, cp);
  for (std::uint32_t i = 0; i < cp.count(); ++i)
    for (std::uint32_t j = i + 1; j < cp.count(); ++j) {
      const std::vector<Element> s{g.element(cp.representative[i]), g.element(cp.representative[j])};
      const NormProfile pr = word_norms(g, s);
      const UnionValue v = kernel.evaluate(std::vector<std::uint32_t>{i, j});
      CHECK(v.generates == pr.generates);
      if (pr.generates) CHECK(v.norm == pr.max_finite);
    }
}

TEST_CASE("delta values") {
  CHECK(delta(build_group(GroupSpec::semidihedral(4))).delta.value == 2);
  CHECK(delta(build_group(GroupSpec::semidihedral(5))).delta.value == 3);
  CHECK(delta(build_group(GroupSpec::quaternion(3))).delta.value == 2);
  const DeltaReport m35 = delta(build_group(GroupSpec::modular(3, 5)));
  CHECK(m35.delta.value == 4);
  REQUIRE(m35.predicted.has_value());
  CHECK(*m35.predicted == 4);
  CHECK(m35.match);
}

TEST_CASE("delta_n values") {
  CHECK(delta_n(build_group(GroupSpec::semidihedral(5)), 2).value == 3);
  CHECK(delta_n(build_group(GroupSpec::quaternion(3)), 2).value == 2);
  CHECK(delta_n(build_group(GroupSpec::modular(3, 3)), 2).value == 2);
  // No single element normally generates a noncyclic p-group.
  try {
    delta_n(build_group(GroupSpec::semidihedral(4)), 1);
    FAIL("expected NoGeneratingSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoGeneratingSet);
  }
}

TEST_CASE("witnesses generate and attain the value") {
  for (const GroupSpec& s : {GroupSpec::semidihedral(6), GroupSpec::modular(4, 3), GroupSpec::dihedral(8)}) {
    const Group g = build_group(s);
    const DeltaReport rep = delta(g);
    CHECK(group_norm(g, rep.delta.witness) == rep.delta.value);
    const DeltaEntry d2 = delta_n(g, 2);
    CHECK(d2.witness.size() <= 2);
    CHECK(group_norm(g, d2.witness) == d2.value);
  }
}

TEST_CASE("results do not depend on the evaluator or thread count") {
  for (const GroupSpec& s : {GroupSpec::semidihedral(6), GroupSpec::modular(6, 2), GroupSpec::modular(3, 7)}) {
    const Group g = build_group(s);
    DeltaOptions serial;
    serial.reference = true;
    DeltaOptions one;
    one.threads = 1;
    DeltaOptions four;
    four.threads = 4;
    const DeltaReport r0 = delta(g, serial);
    CHECK(r0.delta == delta(g, one).delta);
    CHECK(r0.delta == delta(g, four).delta);
    CHECK(delta_n(g, 2, serial) == delta_n(g, 2, four));
    CHECK(delta_n(g, 3, one) == delta_n(g, 3, four));
  }
}

TEST_CASE("exhaustive search agrees with the pruned search") {
  for (const GroupSpec& s : {GroupSpec::semidihedral(4), GroupSpec::quaternion(4), GroupSpec::modular(4, 2),
                             GroupSpec::modular(3, 3), GroupSpec::dihedral(6), GroupSpec::dihedral(9)}) {
    const Group g = build_group(s);
    CHECK(delta_n(g, class_pair_count(g)).value == delta(g).delta.value);
  }
}
