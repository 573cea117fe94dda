#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

/// Partition of G into conjugacy classes.  Class ids follow the order of
/// first appearance when scanning element indices, so class 0 is {1} and
/// each representative is the smallest index in its class.
struct ClassDecomposition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> representative;
  std::vector<std::vector<std::uint32_t>> members;
  /// inverse_class[c] is the class of the inverses of class c.
  std::vector<std::uint32_t> inverse_class;

  std::size_t count() const noexcept { return representative.size(); }
  std::size_t size_of(std::uint32_t c) const noexcept { return members[c].size(); }
};

/// Orbits of the conjugation action, computed by closing each element under
/// conjugation by the group generators a and b.
ClassDecomposition conjugacy_classes(const Group& g);

/// Conj_G(S^{±1}) together with the set it came from.
struct ConjClosedSet {
  std::vector<std::uint32_t> members;  // sorted element indices
  std::vector<Element> origin;

  bool contains(std::uint32_t idx) const;
  friend bool operator==(const ConjClosedSet& x, const ConjClosedSet& y) {
    return x.members == y.members;
  }
};

/// Every h^{-1} s h with s or s^{-1} in S.  Throws EmptySet for empty S.
ConjClosedSet conj_set(const Group& g, std::span<const Element> s);
ConjClosedSet conj_set(const Group& g, const ClassDecomposition& classes,
                       std::span<const Element> s);

/// Word-norm distance table for one set S.
struct NormProfile {
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> distance;  // indexed by element index
  std::vector<Element> set;
  std::uint32_t max_finite = 0;
  bool generates = false;

  std::uint32_t at(const Group& g, const Element& x) const { return distance[g.index(x)]; }
};

/// Breadth-first search from the identity in the Cayley graph on
/// Conj_G(S^{±1}); unreachable elements (outside <<S>>) get kUnreachable.
NormProfile word_norms(const Group& g, std::span<const Element> s);
NormProfile word_norms(const Group& g, const ConjClosedSet& c);

/// B_S(k): elements that are products of at most k elements of Conj_G(S^{±1}).
std::vector<Element> ball(const Group& g, std::span<const Element> s, std::uint32_t k);

bool is_normally_generating(const Group& g, std::span<const Element> s);

/// ||G||_S.  Throws NotNormallyGenerating when <<S>> != G.
std::uint32_t group_norm(const Group& g, std::span<const Element> s);

/// Array BFS over an explicit generator list (element indices), using the
/// normal-form arithmetic of g.  This is the serial reference every faster
/// kernel is checked against.
std::vector<std::uint32_t> bfs_distances(const Group& g, std::span<const std::uint32_t> generators);

}  // namespace conjdiam
