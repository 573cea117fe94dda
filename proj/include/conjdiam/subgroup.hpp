#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

/// A subgroup of a Group, stored as a sorted list of element indices plus a
/// membership bitmap over all of G.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<std::uint32_t> members, std::vector<Element> generators,
           std::size_t group_order);

  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::uint32_t idx) const noexcept { return idx < in_.size() && in_[idx]; }
  const std::vector<std::uint32_t>& members() const noexcept { return members_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }

  friend bool operator==(const Subgroup& x, const Subgroup& y) { return x.members_ == y.members_; }

 private:
  std::vector<std::uint32_t> members_;
  std::vector<Element> generators_;
  std::vector<char> in_;
};

/// Smallest subgroup containing `gens`; the order is checked against
/// Lagrange's theorem.
Subgroup subgroup_generated(const Group& g, std::span<const Element> gens);

/// <<S>>: the subgroup generated by every conjugate of every element of S.
Subgroup normal_closure(const Group& g, std::span<const Element> s);

bool is_normal(const Group& g, const Subgroup& h);

Subgroup center(const Group& g);

/// Subgroups of index p.  Only for p-groups (throws InvalidSpec otherwise).
std::vector<Subgroup> maximal_subgroups(const Group& g);

/// Intersection of the maximal subgroups.
Subgroup frattini(const Group& g);

Subgroup intersect(const Group& g, const Subgroup& x, const Subgroup& y);

/// Returns p when |G| = p^k, 0 otherwise.
std::int64_t prime_of_p_group(std::int64_t order);

}  // namespace conjdiam
