#pragma once

#include <cstdint>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

/// A finite group given by its full multiplication table.  Serves as an
/// oracle independent of the normal-form arithmetic: every query below is
/// answered by brute force over the table.
class TableGroup {
 public:
  /// Takes an order x order table (row-major).  Throws InvalidSpec unless the
  /// group axioms hold; associativity is checked exhaustively when
  /// order^3 <= exhaustive_limit and on `samples` random triples otherwise.
  TableGroup(std::uint32_t order, std::vector<std::uint32_t> table,
             std::uint64_t exhaustive_limit = std::uint64_t{1} << 24,
             std::uint64_t samples = 200000);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  std::uint32_t inv(std::uint32_t x) const noexcept { return inverse_[x]; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  /// h^{-1} x h.
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t h) const noexcept {
    return mul(mul(inv(h), x), h);
  }

  /// Orbit of x under conjugation by every element, sorted.
  std::vector<std::uint32_t> conjugacy_class(std::uint32_t x) const;
  /// Class id per element (ids in order of first appearance).
  std::vector<std::uint32_t> class_ids() const;
  /// Elements commuting with every element, sorted.
  std::vector<std::uint32_t> center() const;
  /// Closure of `gens` under multiplication, sorted.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;
  std::uint32_t element_order(std::uint32_t x) const noexcept;

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
};

/// Full multiplication table of g on dense indices; OrderCapExceeded when
/// |G|^2 entries would exceed `max_entries`.
std::vector<std::uint32_t> multiplication_table(const Group& g,
                                                std::uint64_t max_entries = std::uint64_t{1} << 26);

/// Multiplication table of the family presentation, computed in a faithful
/// monomial matrix representation rather than with the normal-form rule.
/// Indices follow the same convention as Group (a^i b^j -> i * ord_b + j).
std::vector<std::uint32_t> presentation_table(const GroupSpec& spec,
                                              std::uint64_t max_entries = std::uint64_t{1} << 26);

/// Table group of the presentation, with the axioms verified.  Independent
/// of Group::multiply, so it can serve as an oracle for it.
TableGroup build_table_group(const GroupSpec& spec);
TableGroup build_table_group(const Group& g);

/// Cyclic group of order m, for tests needing an abelian oracle.
TableGroup cyclic_table_group(std::uint32_t m);

}  // namespace conjdiam
