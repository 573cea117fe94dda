#include <doctest.h>

#include <json.hpp>

#include "conjdiam/error.hpp"
#include "conjdiam/harness.hpp"

using namespace conjdiam;

TEST_CASE("suite names round trip") {
  for (Suite s : applicable_suites(GroupSpec::modular(3, 3))) CHECK(parse_suite(suite_name(s)) == s);
  CHECK_THROWS_AS(parse_suite("Nope"), Error);
}

TEST_CASE("suite applicability") {
  const Group q3 = build_group(GroupSpec::quaternion(3));
  try {
    run_lemma_suite(q3, Suite::SDClassFormula);
    FAIL("expected SuiteNotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SuiteNotApplicable);
  }
  CHECK(run_lemma_suite(q3, Suite::QClassFormula).passed);
  CHECK_FALSE(suite_applies(Suite::PowerFormula, GroupSpec::dihedral(5)));
}

TEST_CASE("individual suites pass") {
  const SuiteResult pf = run_lemma_suite(build_group(GroupSpec::modular(4, 2)), Suite::PowerFormula);
  CHECK(pf.passed);
  CHECK(pf.failures == 0);
  CHECK(pf.checked > 0);
  CHECK(run_lemma_suite(build_group(GroupSpec::semidihedral(4)), Suite::BallAdditivity).passed);
}

TEST_CASE("empty grid") {
  const VerificationReport r = run_verification({});
  CHECK(r.records.empty());
  CHECK(r.pass);
}

TEST_CASE("single instance record") {
  const VerificationReport r = run_verification({GroupSpec::semidihedral(4)});
  REQUIRE(r.records.size() == 1);
  const InstanceRecord& rec = r.records[0];
  CHECK(rec.delta == 2);
  CHECK(rec.delta2 == 2);
  CHECK(rec.match);
  CHECK(rec.delta2_equals_delta);
  CHECK(rec.order == 16);
  CHECK(rec.suites_failed == 0);
  CHECK(rec.suites.size() == applicable_suites(rec.spec).size());
  CHECK(r.pass);
}

TEST_CASE("reports are sorted and deterministic") {
  const std::vector<GroupSpec> grid{GroupSpec::modular(3, 5), GroupSpec::dihedral(6), GroupSpec::quaternion(4),
                                    GroupSpec::modular(4, 2)};
  VerificationConfig c;
  c.random_cases = 5000;
  c.decomposition_sequences = 500;
  c.threads = 3;
  const std::string j1 = to_json(run_verification(grid, c));
  c.threads = 1;
  const std::string j2 = to_json(run_verification(grid, c));
  CHECK(j1 == j2);
  const auto parsed = nlohmann::json::parse(j1);
  CHECK(parsed["version"] == 1);
  CHECK(parsed["seed"] == c.seed);
  CHECK(parsed["pass"] == true);
  REQUIRE(parsed["records"].size() == 4);
  CHECK(parsed["records"][0]["label"] == "D_12");
  CHECK(parsed["records"][2]["label"] == "M_3(5)");
  CHECK(parsed["records"][3]["label"] == "M_4(2)");
  for (const auto& rec : parsed["records"]) {
    for (const char* key : {"family", "n", "p", "order", "classes", "delta", "predicted", "match", "delta2",
                            "delta2_equals_delta", "suites", "millis"})
      CHECK(rec.contains(key));
  }
}

TEST_CASE("csv summary") {
  VerificationConfig c;
  c.suites = {Suite::GroupAxioms};
  const std::string csv = to_csv(run_verification({GroupSpec::quaternion(3)}, c));
  CHECK(csv == "family,n,p,order,delta,predicted,match,millis\nquaternion,3,2,8,2,2,yes,0\n");
}

TEST_CASE("mutations are caught") {
  auto fails_somewhere = [](const Group& g) {
    VerificationConfig c;
    c.random_cases = 2000;
    c.decomposition_sequences = 200;
    for (Suite s : applicable_suites(g.spec())) {
      if (s == Suite::ExhaustiveDelta) continue;
      if (!run_lemma_suite(g, s, c).passed) return true;
    }
    return false;
  };
  const Group sd = build_group(GroupSpec::semidihedral(4));
  CHECK(fails_somewhere(sd.with_twist_override(1)));
  CHECK(fails_somewhere(sd.with_twist_override(5)));
  CHECK(fails_somewhere(sd.with_product_shift(2)));
  const Group q = build_group(GroupSpec::quaternion(4));
  CHECK(fails_somewhere(q.with_fold_override(0)));
  const Group m = build_group(GroupSpec::modular(3, 3));
  CHECK(fails_somewhere(m.with_twist_override(m.action_exponent())));
  CHECK(fails_somewhere(m.with_product_shift(3)));
  const Group d = build_group(GroupSpec::dihedral(5));
  CHECK(fails_somewhere(d.with_twist_override(1)));
  // The unmutated groups pass everything.
  CHECK_FALSE(fails_somewhere(sd));
  CHECK_FALSE(fails_somewhere(m));
}

TEST_CASE("table agreement pinpoints a wrong twist") {
  const Group m = build_group(GroupSpec::modular(3, 3));
  const SuiteResult r = run_lemma_suite(m.with_twist_override(m.action_exponent()), Suite::TableAgreement);
  CHECK_FALSE(r.passed);
  CHECK(r.failures > 0);
  CHECK_FALSE(r.counterexample.empty());
}
