#include "conjdiam/norm.hpp"

#include <algorithm>

#include "conjdiam/error.hpp"

namespace conjdiam {

ClassDecomposition conjugacy_classes(const Group& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  ClassDecomposition cd;
  cd.class_of.assign(n, kNone);
  const auto gens = g.generators();
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cd.class_of[x] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(cd.representative.size());
    std::vector<std::uint32_t> orbit{x};
    cd.class_of[x] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Element& h : gens) {
        const std::uint32_t y = g.index(g.conjugate(g.element(orbit[k]), h));
        if (cd.class_of[y] == kNone) {
          cd.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cd.representative.push_back(x);
    cd.members.push_back(std::move(orbit));
  }
  cd.inverse_class.resize(cd.count());
  for (std::uint32_t c = 0; c < cd.count(); ++c)
    cd.inverse_class[c] = cd.class_of[g.inv(cd.representative[c])];
  return cd;
}

bool ConjClosedSet::contains(std::uint32_t idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

ConjClosedSet conj_set(const Group& g, const ClassDecomposition& classes,
                       std::span<const Element> s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "conj_set needs a nonempty set");
  std::vector<char> take(classes.count(), 0);
  for (const Element& x : s) {
    const std::uint32_t c = classes.class_of[g.index(x)];
    take[c] = 1;
    take[classes.inverse_class[c]] = 1;
  }
  ConjClosedSet out;
  out.origin.assign(s.begin(), s.end());
  for (std::uint32_t c = 0; c < classes.count(); ++c)
    if (take[c]) out.members.insert(out.members.end(), classes.members[c].begin(), classes.members[c].end());
  std::sort(out.members.begin(), out.members.end());
  return out;
}

ConjClosedSet conj_set(const Group& g, std::span<const Element> s) {
  return conj_set(g, conjugacy_classes(g), s);
}

std::vector<std::uint32_t> bfs_distances(const Group& g, std::span<const std::uint32_t> generators) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::uint32_t> dist(n, NormProfile::kUnreachable);
  const std::uint32_t e = g.index(g.identity());
  dist[e] = 0;
  std::vector<std::uint32_t> queue{e};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    const Element ex = g.element(x);
    for (std::uint32_t c : generators) {
      const std::uint32_t y = g.index(g.multiply(ex, g.element(c)));
      if (dist[y] == NormProfile::kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

NormProfile word_norms(const Group& g, const ConjClosedSet& c) {
  std::vector<std::uint32_t> gens;
  const std::uint32_t e = g.index(g.identity());
  for (std::uint32_t m : c.members)
    if (m != e) gens.push_back(m);
  NormProfile prof;
  prof.set = c.origin;
  prof.distance = bfs_distances(g, gens);
  prof.generates = true;
  for (std::uint32_t d : prof.distance) {
    if (d == NormProfile::kUnreachable)
      prof.generates = false;
    else
      prof.max_finite = std::max(prof.max_finite, d);
  }
  return prof;
}

NormProfile word_norms(const Group& g, std::span<const Element> s) {
  return word_norms(g, conj_set(g, s));
}

std::vector<Element> ball(const Group& g, std::span<const Element> s, std::uint32_t k) {
  std::vector<Element> out;
  if (k == 0 || s.empty()) {
    out.push_back(g.identity());
    return out;
  }
  const NormProfile prof = word_norms(g, s);
  for (std::uint32_t x = 0; x < prof.distance.size(); ++x)
    if (prof.distance[x] <= k) out.push_back(g.element(x));
  return out;
}

bool is_normally_generating(const Group& g, std::span<const Element> s) {
  if (s.empty()) return g.order() == 1;
  return word_norms(g, s).generates;
}

std::uint32_t group_norm(const Group& g, std::span<const Element> s) {
  if (s.empty()) throw Error(ErrorCode::NotNormallyGenerating, "empty set");
  const NormProfile prof = word_norms(g, s);
  if (!prof.generates)
    throw Error(ErrorCode::NotNormallyGenerating, "set does not normally generate " + spec_label(g.spec()));
  return prof.max_finite;
}

}  // namespace conjdiam
