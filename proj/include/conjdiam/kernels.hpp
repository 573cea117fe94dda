#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "conjdiam/group.hpp"
#include "conjdiam/norm.hpp"

namespace conjdiam {

/// Nontrivial conjugacy classes grouped with their inverse classes.  A union
/// of pairs is exactly what Conj_G(S^{±1}) can be for a set S.
struct ClassPairs {
  std::vector<std::vector<std::uint32_t>> classes;  // class ids per pair
  std::vector<std::vector<std::uint32_t>> members;  // sorted element indices per pair
  std::vector<std::uint32_t> representative;        // smallest element index per pair

  std::size_t count() const noexcept { return representative.size(); }
};

/// Pairs ordered by their smallest class id; the identity class is left out.
ClassPairs class_pairs(const ClassDecomposition& classes);

/// Outcome of one BFS on a union of class pairs.
struct UnionValue {
  bool generates = false;
  std::uint32_t norm = 0;  // ||G||_S when generates, else the depth reached

  friend bool operator==(const UnionValue&, const UnionValue&) = default;
};

/// Serial reference: array BFS with the normal-form arithmetic.
class ReferenceEvaluator {
 public:
  ReferenceEvaluator(const Group& g, const ClassPairs& pairs) : g_(&g), pairs_(&pairs) {}
  UnionValue evaluate(std::span<const std::uint32_t> pair_ids) const;

 private:
  const Group* g_;
  const ClassPairs* pairs_;
};

/// Frontier-bitset BFS.  For every pair P and element x it stores the mask
/// of x·P; a BFS level is the OR of the masks of the frontier.  The combined
/// mask table for a union can be built incrementally, which the exhaustive
/// search exploits.  Immutable after construction; evaluate() only touches
/// caller-provided scratch, so one kernel can be shared by many threads.
class BitsetKernel {
 public:
  BitsetKernel(const Group& g, const ClassPairs& pairs);

  std::size_t order() const noexcept { return order_; }
  std::size_t words() const noexcept { return words_; }
  std::size_t pair_count() const noexcept { return pairs_; }

  /// Scratch holding one combined mask table (order * words).
  std::vector<std::uint64_t> make_table() const {
    return std::vector<std::uint64_t>(order_ * words_, 0);
  }
  /// table |= masks of pair `pair`.
  void accumulate(std::span<std::uint64_t> table, std::uint32_t pair) const;
  /// dst = src | masks of pair `pair`.
  void accumulate(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                  std::uint32_t pair) const;
  /// BFS from the identity using a combined mask table.
  UnionValue run(std::span<const std::uint64_t> table) const;

  UnionValue evaluate(std::span<const std::uint32_t> pair_ids) const;

  /// Bytes the mask tables would need for this group and pair count.
  static std::uint64_t footprint(std::uint64_t order, std::uint64_t pairs);

 private:
  std::size_t order_;
  std::size_t words_;
  std::size_t pairs_;
  std::uint32_t identity_;
  std::vector<std::uint64_t> masks_;  // [pair][element][word]
};

}  // namespace conjdiam
