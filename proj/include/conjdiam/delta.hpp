#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

struct DeltaOptions {
  /// Worker threads for candidate evaluation; 0 means the OpenMP default.
  int threads = 0;
  /// Evaluate candidates serially with the array-BFS reference instead of
  /// the parallel bitset kernel.  Results are identical either way.
  bool reference = false;
};

/// Maximum of ||G||_S over one family of candidate sets, with the
/// lexicographically least witness (class representatives, by index).
struct DeltaEntry {
  std::size_t max_set_size = 0;  // n for Delta_n; 0 for Delta
  std::uint32_t value = 0;
  std::vector<Element> witness;
  std::uint64_t candidates = 0;  // unions evaluated
  std::uint64_t generating = 0;  // of which normally generating

  friend bool operator==(const DeltaEntry&, const DeltaEntry&) = default;
};

struct DeltaReport {
  GroupSpec spec;
  std::vector<DeltaEntry> delta_n;
  DeltaEntry delta;
  std::optional<std::int64_t> predicted;
  bool match = false;
};

/// Delta_n(G): exhaustive over every union of at most n class pairs (no
/// pruning).  Throws NoGeneratingSet when no such union normally generates.
DeltaEntry delta_n(const Group& g, std::size_t n, const DeltaOptions& opts = {});

/// Delta(G): maximum over inclusion-minimal normally generating unions of
/// class pairs, enumerated level by level with superset pruning.  The report
/// carries the closed-form prediction for the family and a match flag.
DeltaReport delta(const Group& g, const DeltaOptions& opts = {});

/// Number of inverse-closed class pairs (excluding {1}) of g.
std::size_t class_pair_count(const Group& g);

}  // namespace conjdiam
