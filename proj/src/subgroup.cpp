#include "conjdiam/subgroup.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "conjdiam/error.hpp"

namespace conjdiam {

Subgroup::Subgroup(std::vector<std::uint32_t> members, std::vector<Element> generators,
                   std::size_t group_order)
    : members_(std::move(members)), generators_(std::move(generators)), in_(group_order, 0) {
  std::sort(members_.begin(), members_.end());
  for (std::uint32_t m : members_) in_[m] = 1;
}

namespace {

// Worklist closure starting from the members of `start`.
Subgroup close(const Group& g, const std::vector<std::uint32_t>& start,
               std::span<const Element> gens) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> members;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(g.index(g.identity()));
  for (std::uint32_t x : start) add(x);
  std::vector<std::uint32_t> gen_idx;
  for (const Element& e : gens) gen_idx.push_back(g.index(e));
  for (std::uint32_t x : start) gen_idx.push_back(x);
  std::sort(gen_idx.begin(), gen_idx.end());
  gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
  for (std::uint32_t x : gen_idx) add(x);
  // In a finite group closure under products suffices.
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::uint32_t s : gen_idx) add(g.mul(members[k], s));
  if (n % members.size() != 0)
    throw Error(ErrorCode::InvalidSpec, "subgroup order violates Lagrange's theorem");
  return Subgroup(std::move(members), std::vector<Element>(gens.begin(), gens.end()), n);
}

}  // namespace

Subgroup subgroup_generated(const Group& g, std::span<const Element> gens) {
  return close(g, {}, gens);
}

Subgroup normal_closure(const Group& g, std::span<const Element> s) {
  std::vector<Element> conj;
  for (const Element& x : s)
    for (std::uint32_t h = 0; h < g.order(); ++h) conj.push_back(g.conjugate(x, g.element(h)));
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  Subgroup out = subgroup_generated(g, conj);
  assert(is_normal(g, out));
  return Subgroup(out.members(), std::vector<Element>(s.begin(), s.end()),
                  static_cast<std::size_t>(g.order()));
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (std::uint32_t x : h.members())
    for (const Element& gen : g.generators())
      if (!h.contains(g.index(g.conjugate(g.element(x), gen)))) return false;
  return true;
}

Subgroup center(const Group& g) {
  std::vector<std::uint32_t> members;
  const auto gens = g.generators();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Element ex = g.element(x);
    bool central = true;
    for (const Element& s : gens) central = central && g.multiply(ex, s) == g.multiply(s, ex);
    if (central) members.push_back(x);
  }
  return Subgroup(std::move(members), {}, static_cast<std::size_t>(g.order()));
}

std::int64_t prime_of_p_group(std::int64_t order) {
  if (order < 2) return 0;
  std::int64_t p = 2;
  while (order % p != 0) ++p;
  std::int64_t r = order;
  while (r % p == 0) r /= p;
  return r == 1 ? p : 0;
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  const std::int64_t p = prime_of_p_group(g.order());
  if (p == 0)
    throw Error(ErrorCode::InvalidSpec,
                spec_label(g.spec()) + " is not a p-group; maximal subgroups are only computed for p-groups");
  // Every index-p subgroup contains all p-th powers and commutators.
  std::vector<Element> seeds;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Element ex = g.element(x);
    seeds.push_back(g.power(ex, p));
    for (const Element& s : g.generators()) seeds.push_back(g.commutator(ex, s));
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  const Subgroup base = subgroup_generated(g, seeds);
  const auto target = static_cast<std::size_t>(g.order() / p);

  std::vector<Subgroup> found;
  std::vector<Subgroup> frontier{base};
  if (base.size() == target) found.push_back(base);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier) {
      std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
      for (std::uint32_t x : h.members()) covered[x] = 1;
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (covered[x]) continue;
        std::vector<Element> gens;
        for (std::uint32_t m : h.members()) gens.push_back(g.element(m));
        gens.push_back(g.element(x));
        Subgroup k = subgroup_generated(g, gens);
        for (std::uint32_t m : k.members()) covered[m] = 1;
        auto& bucket = k.size() == target ? found : next;
        if (k.size() > target) continue;
        if (std::find(bucket.begin(), bucket.end(), k) == bucket.end())
          bucket.push_back(Subgroup(k.members(), {g.element(x)}, static_cast<std::size_t>(g.order())));
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(),
            [](const Subgroup& x, const Subgroup& y) { return x.members() < y.members(); });
  return found;
}

Subgroup intersect(const Group& g, const Subgroup& x, const Subgroup& y) {
  std::vector<std::uint32_t> members;
  std::set_intersection(x.members().begin(), x.members().end(), y.members().begin(),
                        y.members().end(), std::back_inserter(members));
  return Subgroup(std::move(members), {}, static_cast<std::size_t>(g.order()));
}

Subgroup frattini(const Group& g) {
  const auto maxes = maximal_subgroups(g);
  Subgroup acc = maxes.front();
  for (std::size_t k = 1; k < maxes.size(); ++k) acc = intersect(g, acc, maxes[k]);
  return acc;
}

}  // namespace conjdiam
