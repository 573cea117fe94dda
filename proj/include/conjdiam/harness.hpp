#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

enum class Suite {
  GroupAxioms,
  TableAgreement,
  Presentation,
  TwistPower,
  ConjugationShift,
  PowerFormula,
  SDClassFormula,
  QClassFormula,
  MnpClassFormula,
  DihedralClassFormula,
  NormalSubgroups,
  FrattiniCenter,
  NormAxioms,
  NormInvariants,
  BallAdditivity,
  StructureLemma,
  OrderElement,
  StandardPair,
  NormBound,
  LowerBound,
  Decomposition,
  FixtureNorms,
  ExhaustiveDelta,
};

std::string_view suite_name(Suite s);
Suite parse_suite(std::string_view name);
bool suite_applies(Suite s, const GroupSpec& spec);
/// Every suite that applies to the family of `spec`, in enum order.
std::vector<Suite> applicable_suites(const GroupSpec& spec);

struct VerificationConfig {
  std::uint64_t seed = 20240607;
  int threads = 0;
  /// Groups up to this order get exhaustive property checks.
  std::int64_t exhaustive_order = 64;
  /// Randomized cases per property suite on larger groups.
  std::uint64_t random_cases = 100000;
  /// Random factor sequences per modular instance.
  std::uint64_t decomposition_sequences = 10000;
  /// Include wall-clock milliseconds in records (makes reports nondeterministic).
  bool record_timings = false;
  /// Restrict to these suites when nonempty.
  std::vector<Suite> suites;
};

struct SuiteResult {
  Suite suite = Suite::GroupAxioms;
  bool passed = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;  // first failure, empty when passed
};

struct InstanceRecord {
  GroupSpec spec;
  std::int64_t order = 0;
  std::size_t classes = 0;
  std::uint32_t delta = 0;
  std::int64_t predicted = 0;
  bool match = false;
  std::uint32_t delta2 = 0;
  bool delta2_equals_delta = false;
  std::vector<SuiteResult> suites;
  std::size_t suites_passed = 0;
  std::size_t suites_failed = 0;
  double millis = 0.0;

  bool passed() const { return match && delta2_equals_delta && suites_failed == 0; }
};

struct VerificationReport {
  static constexpr int kVersion = 1;
  std::uint64_t seed = 0;
  std::vector<InstanceRecord> records;
  bool pass = true;
};

/// Runs one suite; throws SuiteNotApplicable on a family mismatch.
SuiteResult run_lemma_suite(const Group& g, Suite suite, const VerificationConfig& config = {});

/// Verifies every instance (in parallel) and returns records sorted by spec.
VerificationReport run_verification(const std::vector<GroupSpec>& grid,
                                    const VerificationConfig& config = {});

/// SD_4..SD_6, Q_3..Q_6, M_4(2)..M_6(2), M_3(3), M_4(3), M_3(5), M_3(7),
/// D_2n for n in {3,4,5,6,8,9,10}.
std::vector<GroupSpec> default_grid();

/// JSON: {version, seed, records[], pass}.
std::string to_json(const VerificationReport& report, int indent = 2);
/// One row per instance: family,n,p,order,delta,predicted,match,millis.
std::string to_csv(const VerificationReport& report);

}  // namespace conjdiam
