#include "conjdiam/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "conjdiam/delta.hpp"
#include "conjdiam/error.hpp"
#include "conjdiam/expr.hpp"
#include "conjdiam/formulas.hpp"
#include "conjdiam/kernels.hpp"
#include "conjdiam/norm.hpp"
#include "conjdiam/subgroup.hpp"
#include "conjdiam/table_group.hpp"

namespace conjdiam {

namespace {

struct SuiteInfo {
  Suite suite;
  std::string_view name;
  std::array<bool, 4> families;  // Dihedral, Semidihedral, Quaternion, Modular
};

constexpr bool Y = true, N = false;

constexpr std::array<SuiteInfo, 23> kSuites{{
    {Suite::GroupAxioms, "GroupAxioms", {Y, Y, Y, Y}},
    {Suite::TableAgreement, "TableAgreement", {Y, Y, Y, Y}},
    {Suite::Presentation, "Presentation", {Y, Y, Y, Y}},
    {Suite::TwistPower, "TwistPower", {N, Y, N, N}},
    {Suite::ConjugationShift, "ConjugationShift", {N, N, N, Y}},
    {Suite::PowerFormula, "PowerFormula", {N, N, N, Y}},
    {Suite::SDClassFormula, "SDClassFormula", {N, Y, N, N}},
    {Suite::QClassFormula, "QClassFormula", {N, N, Y, N}},
    {Suite::MnpClassFormula, "MnpClassFormula", {N, N, N, Y}},
    {Suite::DihedralClassFormula, "DihedralClassFormula", {Y, N, N, N}},
    {Suite::NormalSubgroups, "NormalSubgroups", {N, Y, Y, N}},
    {Suite::FrattiniCenter, "FrattiniCenter", {N, N, N, Y}},
    {Suite::NormAxioms, "NormAxioms", {Y, Y, Y, Y}},
    {Suite::NormInvariants, "NormInvariants", {Y, Y, Y, Y}},
    {Suite::BallAdditivity, "BallAdditivity", {Y, Y, Y, Y}},
    {Suite::StructureLemma, "StructureLemma", {N, Y, Y, N}},
    {Suite::OrderElement, "OrderElement", {N, N, N, Y}},
    {Suite::StandardPair, "StandardPair", {Y, Y, Y, Y}},
    {Suite::NormBound, "NormBound", {N, N, N, Y}},
    {Suite::LowerBound, "LowerBound", {N, N, N, Y}},
    {Suite::Decomposition, "Decomposition", {N, N, N, Y}},
    {Suite::FixtureNorms, "FixtureNorms", {N, Y, Y, N}},
    {Suite::ExhaustiveDelta, "ExhaustiveDelta", {Y, Y, Y, Y}},
}};

const SuiteInfo& info(Suite s) { return kSuites[static_cast<std::size_t>(s)]; }

using Rng = std::mt19937_64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One stream per (seed, instance, suite) so results do not depend on the
// order in which instances are scheduled.
Rng make_rng(std::uint64_t seed, const GroupSpec& spec, Suite suite) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ static_cast<std::uint64_t>(spec.family));
  h = splitmix(h ^ static_cast<std::uint64_t>(spec.n));
  h = splitmix(h ^ static_cast<std::uint64_t>(spec.p));
  h = splitmix(h ^ static_cast<std::uint64_t>(suite));
  return Rng(h);
}

std::uint32_t pick(Rng& rng, std::uint64_t bound) {
  return static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng));
}

struct Check {
  SuiteResult result;

  void expect(bool ok, const std::string& what) {
    ++result.checked;
    if (ok) return;
    ++result.failures;
    if (result.passed) result.counterexample = what;
    result.passed = false;
  }
  template <class F>
  void expect_lazy(bool ok, F&& describe) {
    ++result.checked;
    if (ok) return;
    ++result.failures;
    if (result.passed) result.counterexample = describe();
    result.passed = false;
  }
};

std::string show(const Element& x) { return format_element(x); }
std::string show(const std::vector<Element>& xs) { return "{" + format_set(xs) + "}"; }

std::int64_t presentation_exponent(const GroupSpec& s) {
  switch (s.family) {
    case Family::Dihedral: return s.n - 1;
    case Family::Semidihedral: return ipow(2, s.n - 2) - 1;
    case Family::Quaternion: return ipow(2, s.n - 1) - 1;
    case Family::Modular: return 1 + ipow(s.p, s.n - 2);
  }
  return 1;
}

bool exhaustive(const Group& g, const VerificationConfig& c) { return g.order() <= c.exhaustive_order; }

std::vector<Element> indices_to_elements(const Group& g, const std::vector<std::uint32_t>& v) {
  std::vector<Element> out;
  for (std::uint32_t x : v) out.push_back(g.element(x));
  return out;
}

// ---------------------------------------------------------------- group level

void group_axioms(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const auto n = static_cast<std::uint32_t>(g.order());
  const std::uint32_t e = g.index(g.identity());
  for (std::uint32_t x = 0; x < n; ++x) {
    chk.expect_lazy(g.mul(x, e) == x && g.mul(e, x) == x,
                    [&] { return "identity fails at " + show(g.element(x)); });
    chk.expect_lazy(g.mul(x, g.inv(x)) == e && g.mul(g.inv(x), x) == e,
                    [&] { return "inverse fails at " + show(g.element(x)); });
  }
  auto assoc = [&](std::uint32_t x, std::uint32_t y, std::uint32_t w) {
    chk.expect_lazy(g.mul(g.mul(x, y), w) == g.mul(x, g.mul(y, w)), [&] {
      return "(xy)w != x(yw) for x=" + show(g.element(x)) + ", y=" + show(g.element(y)) +
             ", w=" + show(g.element(w));
    });
  };
  if (exhaustive(g, c)) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t w = 0; w < n; ++w) assoc(x, y, w);
  } else {
    for (std::uint64_t k = 0; k < c.random_cases; ++k) assoc(pick(rng, n), pick(rng, n), pick(rng, n));
  }
}

void table_agreement(const Group& g, Check& chk) {
  const TableGroup t = build_table_group(g.spec());
  const auto n = static_cast<std::uint32_t>(g.order());
  chk.expect(t.order() == n, "table order differs from |G|");
  if (t.order() != n) return;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y)
      chk.expect_lazy(g.mul(x, y) == t.mul(x, y), [&] {
        return show(g.element(x)) + " * " + show(g.element(y)) + " = " +
               show(g.element(g.mul(x, y))) + ", table gives " + show(g.element(t.mul(x, y)));
      });
    chk.expect_lazy(g.inv(x) == t.inv(x), [&] { return "inverse of " + show(g.element(x)); });
    chk.expect_lazy(g.order_of(g.element(x)) == static_cast<std::int64_t>(t.element_order(x)),
                    [&] { return "order of " + show(g.element(x)); });
  }
}

void presentation(const Group& g, Check& chk) {
  const GroupSpec& s = g.spec();
  const Element a = g.a(), b = g.b();
  const std::int64_t ord_b = s.family == Family::Quaternion ? 4 : g.ord_b();
  chk.expect(g.order_of(a) == g.ord_a(), "ord(a) = " + std::to_string(g.order_of(a)));
  chk.expect(g.order_of(b) == ord_b, "ord(b) = " + std::to_string(g.order_of(b)));
  const std::int64_t t = presentation_exponent(s);
  chk.expect(g.conjugate(a, b) == g.power(a, t), "b^-1 a b = " + show(g.conjugate(a, b)));
  if (s.family == Family::Quaternion)
    chk.expect(g.power(b, 2) == g.power(a, ipow(2, s.n - 2)), "b^2 = " + show(g.power(b, 2)));
  const auto gens = g.generators();
  chk.expect(static_cast<std::int64_t>(subgroup_generated(g, gens).size()) == g.order(),
             "<a, b> is proper");
  chk.expect(is_standard_pair(g, a, b), "(a, b) is not a standard pair");
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Element e = g.element(x);
    const Element built = g.multiply(g.power(a, e.i), g.power(b, e.j));
    chk.expect_lazy(built == e, [&] { return "a^i b^j != " + show(e); });
    const Element back = parse_element(format_element(e), g);
    chk.expect_lazy(back == e, [&] { return "round trip of " + show(e); });
  }
}

void twist_power(const Group& g, Check& chk) {
  const std::int64_t n = g.spec().n;
  const Element x = g.make(ipow(2, n - 2) - 1);
  Element acc = g.identity();
  for (std::int64_t m = 0; m < 2 * g.ord_a(); ++m, acc = g.multiply(acc, x)) {
    const Element want{sd_twist_power(n, m), 0};
    chk.expect(acc == want, "iterated (a^t)^" + std::to_string(m) + " = " + show(acc));
    chk.expect(g.power(x, -m) == g.make(sd_twist_power(n, -m)),
               "(a^t)^-" + std::to_string(m));
  }
}

void conjugation_shift(const Group& g, Check& chk) {
  const std::int64_t p = g.spec().p;
  for (std::int64_t k = -p; k <= p; ++k) {
    const Element bk = g.power(g.b(), k);
    const Element lhs = g.multiply(g.multiply(bk, g.a()), g.inverse(bk));
    const Element rhs = g.multiply(g.power(g.z(), -k), g.a());
    chk.expect(lhs == rhs, "b^" + std::to_string(k) + " a b^-" + std::to_string(k) + " = " + show(lhs));
  }
  chk.expect(g.order_of(g.z()) == g.spec().p, "ord(z) != p");
}

void power_formula(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const std::int64_t p = g.spec().p, n = g.spec().n;
  const std::int64_t kmax = p * p;
  auto one = [&](std::int64_t l, std::int64_t j) {
    const Element x = g.make(l, j);
    Element acc = g.identity();
    for (std::int64_t k = 1; k <= kmax; ++k) {
      acc = g.multiply(acc, x);
      const Element f = mnp_power(p, n, l, j, k);
      chk.expect_lazy(f == acc && g.power(x, k) == acc, [&] {
        return "(a^" + std::to_string(l) + " b^" + std::to_string(j) + ")^" + std::to_string(k) +
               ": formula " + show(f) + ", iterated " + show(acc);
      });
    }
  };
  const auto budget = static_cast<std::uint64_t>(g.ord_a() * p * kmax);
  if (budget <= (std::uint64_t{1} << 22)) {
    for (std::int64_t l = 0; l < g.ord_a(); ++l)
      for (std::int64_t j = 0; j < p; ++j) one(l, j);
  } else {
    for (std::uint64_t k = 0; k * static_cast<std::uint64_t>(kmax) < c.random_cases; ++k)
      one(pick(rng, static_cast<std::uint64_t>(g.ord_a())), pick(rng, static_cast<std::uint64_t>(p)));
  }
}

// -------------------------------------------------------------- class formulas

void class_formula_suite(const Group& g, Check& chk) {
  const TableGroup t = build_table_group(g.spec());
  const ClassDecomposition cd = conjugacy_classes(g);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Element e = g.element(x);
    std::vector<std::uint32_t> formula;
    for (const Element& y : class_formula(g.spec(), e)) formula.push_back(g.index(y));
    std::sort(formula.begin(), formula.end());
    const auto orbit = t.conjugacy_class(x);
    chk.expect_lazy(formula == orbit, [&] {
      return "class of " + show(e) + ": formula " + show(indices_to_elements(g, formula)) +
             ", orbit " + show(indices_to_elements(g, orbit));
    });
    chk.expect_lazy(cd.members[cd.class_of[x]] == orbit,
                    [&] { return "engine class of " + show(e) + " differs from the orbit"; });
  }
}

// ------------------------------------------------------------------ structure

void normal_subgroups(const Group& g, Check& chk) {
  const Element a = g.a(), a2 = g.power(g.a(), 2), b = g.b();
  const std::vector<std::vector<Element>> gens{{a}, {a2, b}, {a2, g.multiply(a, b)}};
  std::vector<Subgroup> expected;
  for (const auto& gs : gens) {
    const Subgroup h = subgroup_generated(g, gs);
    chk.expect(static_cast<std::int64_t>(h.size()) * 2 == g.order(),
               "<" + format_set(gs) + "> has order " + std::to_string(h.size()));
    chk.expect(is_normal(g, h), "<" + format_set(gs) + "> is not normal");
    expected.push_back(h);
  }
  chk.expect(!(expected[0] == expected[1]) && !(expected[0] == expected[2]) &&
                 !(expected[1] == expected[2]),
             "index-2 subgroups coincide");
  auto maximal = maximal_subgroups(g);
  chk.expect(maximal.size() == 3, "found " + std::to_string(maximal.size()) + " maximal subgroups");
  for (const Subgroup& h : expected)
    chk.expect(std::find(maximal.begin(), maximal.end(), h) != maximal.end(),
               "an index-2 subgroup is not among the maximal subgroups");
}

void frattini_center(const Group& g, Check& chk) {
  const Subgroup phi = frattini(g);
  const Subgroup z = center(g);
  const auto p = g.spec().p;
  chk.expect(phi == z, "Frattini subgroup differs from the center");
  const Element ap = g.power(g.a(), p);
  chk.expect(z == subgroup_generated(g, std::vector<Element>{ap}), "Z(G) != <a^p>");
  chk.expect(z.contains(g.index(g.z())), "z is not central");
  chk.expect(static_cast<std::int64_t>(z.size()) == ipow(p, g.spec().n - 2),
             "|Z(G)| = " + std::to_string(z.size()));
  const TableGroup t = build_table_group(g.spec());
  chk.expect(t.center() == z.members(), "center differs from the table oracle");
}

// ----------------------------------------------------------------------- norms

// Deterministic family of normally generating sets: {a, b} followed by
// generating sets of one or two class representatives.
std::vector<std::vector<Element>> sample_sets(const Group& g, std::size_t limit) {
  std::vector<std::vector<Element>> out{{g.a(), g.b()}};
  const ClassPairs cp = class_pairs(conjugacy_classes(g));
  const std::size_t m = cp.count();
  auto try_add = [&](std::vector<Element> s) {
    if (out.size() < limit && is_normally_generating(g, s)) out.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < m; ++i) try_add({g.element(cp.representative[i])});
  // Spread the two-element choices across the pair list.
  const std::size_t stride = std::max<std::size_t>(1, m / 5);
  for (std::size_t i = 0; i < m && out.size() < limit; i += 1)
    for (std::size_t j = i + 1; j < m && out.size() < limit; j += stride)
      try_add({g.element(cp.representative[i]), g.element(cp.representative[j])});
  return out;
}

// BFS over the table oracle, with the conjugation closure computed there too.
std::vector<std::uint32_t> table_bfs(const Group& g, const TableGroup& t, const std::vector<Element>& s) {
  std::vector<char> inc(t.order(), 0);
  std::vector<std::uint32_t> gens;
  for (const Element& e : s)
    for (std::uint32_t x : {g.index(e), t.inv(g.index(e))})
      for (std::uint32_t h = 0; h < t.order(); ++h) {
        const std::uint32_t c = t.conjugate(x, h);
        if (!inc[c]) {
          inc[c] = 1;
          gens.push_back(c);
        }
      }
  std::vector<std::uint32_t> dist(t.order(), NormProfile::kUnreachable);
  std::vector<std::uint32_t> queue{t.identity()};
  dist[t.identity()] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::uint32_t c : gens) {
      const std::uint32_t y = t.mul(queue[k], c);
      if (dist[y] == NormProfile::kUnreachable) {
        dist[y] = dist[queue[k]] + 1;
        queue.push_back(y);
      }
    }
  return dist;
}

void norm_axioms(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const auto sets = sample_sets(g, 8);
  const TableGroup t = build_table_group(g.spec());
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<NormProfile> profiles;
  for (const auto& s : sets) {
    profiles.push_back(word_norms(g, s));
    const NormProfile& pr = profiles.back();
    chk.expect(pr.generates, show(s) + " does not normally generate");
    chk.expect(pr.distance == table_bfs(g, t, s), "BFS differs from the table oracle for " + show(s));
    const ConjClosedSet cs = conj_set(g, s);
    for (std::uint32_t x = 0; x < n; ++x) {
      const bool unit = x != g.index(g.identity()) && cs.contains(x);
      chk.expect_lazy((pr.distance[x] == 1) == unit,
                      [&] { return "norm 1 iff in Conj(S) fails at " + show(g.element(x)); });
      chk.expect_lazy((pr.distance[x] == 0) == (x == g.index(g.identity())),
                      [&] { return "norm 0 iff identity fails at " + show(g.element(x)); });
    }
  }
  auto triple = [&](const NormProfile& pr, std::uint32_t x, std::uint32_t y) {
    const auto& d = pr.distance;
    chk.expect_lazy(d[g.inv(x)] == d[x],
                    [&] { return "||x^-1|| != ||x|| for x=" + show(g.element(x)) + " in " + show(pr.set); });
    chk.expect_lazy(d[g.mul(x, y)] <= d[x] + d[y], [&] {
      return "||xy|| > ||x||+||y|| for x=" + show(g.element(x)) + ", y=" + show(g.element(y)) +
             " in " + show(pr.set);
    });
    const std::uint32_t conj = g.index(g.conjugate(g.element(x), g.element(y)));
    chk.expect_lazy(d[conj] == d[x], [&] {
      return "||h^-1 x h|| != ||x|| for x=" + show(g.element(x)) + ", h=" + show(g.element(y)) +
             " in " + show(pr.set);
    });
  };
  if (exhaustive(g, c)) {
    for (const auto& pr : profiles)
      for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) triple(pr, x, y);
  } else {
    for (std::uint64_t k = 0; k < c.random_cases; ++k)
      triple(profiles[pick(rng, profiles.size())], pick(rng, n), pick(rng, n));
  }
}

void norm_invariants(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const auto sets = sample_sets(g, 8);
  const auto n = static_cast<std::uint32_t>(g.order());
  const std::uint64_t rounds = exhaustive(g, c) ? 16 : 4;
  for (const auto& s : sets) {
    const NormProfile base = word_norms(g, s);
    for (std::uint64_t r = 0; r < rounds; ++r) {
      // Replacing elements by conjugates or inverses keeps the norm.
      std::vector<Element> moved;
      for (const Element& e : s) {
        Element m = g.conjugate(e, g.element(pick(rng, n)));
        if (pick(rng, 2) == 1) m = g.inverse(m);
        moved.push_back(m);
      }
      chk.expect(word_norms(g, moved).distance == base.distance,
                 "norm changes from " + show(s) + " to " + show(moved));
      // Enlarging S can only shorten norms.
      std::vector<Element> bigger = s;
      bigger.push_back(g.element(pick(rng, n)));
      const NormProfile more = word_norms(g, bigger);
      for (std::uint32_t x = 0; x < n; ++x)
        chk.expect_lazy(more.distance[x] <= base.distance[x], [&] {
          return "||" + show(g.element(x)) + "|| grows from " + show(s) + " to " + show(bigger);
        });
    }
  }
}

void ball_additivity(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const auto n = static_cast<std::uint32_t>(g.order());
  const auto sets = sample_sets(g, exhaustive(g, c) ? 8 : 4);
  for (const auto& s : sets) {
    const NormProfile pr = word_norms(g, s);
    const auto& d = pr.distance;
    const std::uint32_t diam = pr.max_finite;
    for (std::uint32_t k = 0; k <= diam + 1; ++k) {
      auto b = ball(g, s, k);
      std::size_t expect = 0;
      for (std::uint32_t x = 0; x < n; ++x) expect += d[x] <= k;
      bool ok = b.size() == expect;
      for (const Element& e : b) ok = ok && d[g.index(e)] <= k;
      chk.expect(ok, "ball(" + std::to_string(k) + ") disagrees with the norms of " + show(s));
    }
    if (exhaustive(g, c)) {
      for (std::uint32_t k1 = 0; k1 <= diam + 1; ++k1)
        for (std::uint32_t k2 = 0; k1 + k2 <= diam + 1; ++k2) {
          std::vector<char> prod(n, 0);
          for (std::uint32_t x = 0; x < n; ++x) {
            if (d[x] > k1) continue;
            for (std::uint32_t y = 0; y < n; ++y)
              if (d[y] <= k2) prod[g.mul(x, y)] = 1;
          }
          bool ok = true;
          for (std::uint32_t x = 0; x < n; ++x) ok = ok && (prod[x] != 0) == (d[x] <= k1 + k2);
          chk.expect(ok, "B(" + std::to_string(k1) + ")B(" + std::to_string(k2) + ") != B(" +
                             std::to_string(k1 + k2) + ") for " + show(s));
        }
    }
  }
  if (exhaustive(g, c)) return;
  // Random membership checks in both directions.
  std::vector<NormProfile> profiles;
  for (const auto& s : sets) profiles.push_back(word_norms(g, s));
  for (std::uint64_t k = 0; k < c.random_cases; ++k) {
    const NormProfile& pr = profiles[pick(rng, profiles.size())];
    const auto& d = pr.distance;
    const std::uint32_t x = pick(rng, n), y = pick(rng, n);
    chk.expect_lazy(d[g.mul(x, y)] <= d[x] + d[y], [&] {
      return show(g.element(x)) + " * " + show(g.element(y)) + " leaves B(" +
             std::to_string(d[x] + d[y]) + ") for " + show(pr.set);
    });
    if (k % 64 != 0) continue;
    const std::uint32_t w = pick(rng, n);
    const std::uint32_t k1 = pick(rng, d[w] + 1);
    bool split = false;
    for (std::uint32_t u = 0; u < n && !split; ++u)
      split = d[u] <= k1 && d[g.mul(g.inv(u), w)] <= d[w] - k1;
    chk.expect_lazy(split, [&] { return show(g.element(w)) + " has no split for " + show(pr.set); });
  }
}

// Nontrivial class representatives.
std::vector<Element> canonical_elements(const Group& g) {
  const ClassDecomposition cd = conjugacy_classes(g);
  std::vector<Element> out;
  for (std::size_t k = 1; k < cd.count(); ++k) out.push_back(g.element(cd.representative[k]));
  return out;
}

template <class F>
void for_each_subset(const std::vector<Element>& xs, std::size_t max_size, F&& f) {
  std::vector<Element> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty()) f(cur);
    if (cur.size() == max_size) return;
    for (std::size_t k = from; k < xs.size(); ++k) {
      cur.push_back(xs[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

void structure_lemma(const Group& g, const VerificationConfig& c, Check& chk) {
  const auto canon = canonical_elements(g);
  const std::size_t max_size = exhaustive(g, c) ? 3 : 2;
  auto complements = [&](const Element& x, const Element& y) {
    if (x.j != 1) return false;
    if (y.j == 0) return y.i % 2 == 1;
    return y.i % 2 != x.i % 2;
  };
  for_each_subset(canon, max_size, [&](const std::vector<Element>& s) {
    if (!is_normally_generating(g, s)) return;
    bool found = false;
    for (const Element& x : s)
      for (const Element& y : s) {
        if (!complements(x, y)) continue;
        found = true;
        const std::vector<Element> pair{x, y};
        chk.expect(is_normally_generating(g, pair),
                   show(pair) + " from " + show(s) + " does not normally generate");
      }
    chk.expect(found, show(s) + " generates without a complementary pair");
  });
}

void order_element(const Group& g, const VerificationConfig& c, Check& chk) {
  const auto canon = canonical_elements(g);
  const std::size_t max_size = exhaustive(g, c) ? 3 : 2;
  for_each_subset(canon, max_size, [&](const std::vector<Element>& s) {
    if (!is_normally_generating(g, s)) return;
    const Element* x = nullptr;
    for (const Element& e : s)
      if (g.order_of(e) == g.ord_a()) {
        x = &e;
        break;
      }
    chk.expect(x != nullptr, show(s) + " generates but has no element of order " + std::to_string(g.ord_a()));
    if (x == nullptr) return;
    const GeneratorPair pair = find_standard_pair(g, *x);
    const Subgroup cyc = subgroup_generated(g, std::vector<Element>{*x});
    bool outside = false;
    for (const Element& e : s) outside = outside || !cyc.contains(g.index(e));
    chk.expect(outside, show(s) + " lies in <" + show(*x) + ">");
    // Every element off <x> is x^l y^j with 0 < j < p.
    const auto coords = recoordinatize(g, pair);
    for (const Element& e : s) {
      if (cyc.contains(g.index(e))) continue;
      const auto it = std::find(coords.begin(), coords.end(), g.index(e));
      const auto j = g.element(static_cast<std::uint32_t>(it - coords.begin())).j;
      chk.expect(it != coords.end() && j > 0 && j < g.spec().p,
                 show(e) + " has no coordinates in the standard pair");
    }
  });
}

void standard_pair(const Group& g, Check& chk) {
  std::vector<Element> xs;
  for (std::uint32_t idx = 0; idx < g.order(); ++idx)
    if (g.order_of(g.element(idx)) == g.ord_a()) xs.push_back(g.element(idx));
  chk.expect(!xs.empty(), "no element of order ord(a)");
  const std::size_t cap = g.order() <= 512 ? xs.size() : 32;
  const std::size_t stride = std::max<std::size_t>(1, xs.size() / std::max<std::size_t>(1, cap));
  for (std::size_t k = 0; k < xs.size(); k += stride) {
    const Element x = xs[k];
    GeneratorPair pair;
    try {
      pair = find_standard_pair(g, x);
    } catch (const Error&) {
      chk.expect(false, "no standard pair through " + show(x));
      continue;
    }
    chk.expect(pair.x == x && is_standard_pair(g, pair.x, pair.y) && pair.order_x == g.ord_a(),
               "bad certificate for " + show(x));
    chk.expect(recoordinatization_is_isomorphism(g, pair),
               "(" + show(pair.x) + ", " + show(pair.y) + ") does not give an automorphism");
  }
}

void norm_bound(const Group& g, Check& chk) {
  const std::int64_t p = g.spec().p, n = g.spec().n;
  const std::int64_t on = mnp_norm_bound(p, n, true), off = mnp_norm_bound(p, n, false);
  for (std::int64_t l = 0; l < g.ord_a(); ++l)
    for (std::int64_t j = 1; j < p; ++j) {
      const std::vector<Element> s{g.a(), g.make(l, j)};
      const NormProfile pr = word_norms(g, s);
      chk.expect(pr.generates, show(s) + " does not normally generate");
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        const Element e = g.element(x);
        const std::int64_t bound = e.j == 0 ? on : off;
        chk.expect_lazy(static_cast<std::int64_t>(pr.distance[x]) <= bound, [&] {
          return "||" + show(e) + "|| = " + std::to_string(pr.distance[x]) + " > " +
                 std::to_string(bound) + " for " + show(s);
        });
      }
    }
}

void lower_bound(const Group& g, Check& chk) {
  const std::int64_t p = g.spec().p, n = g.spec().n;
  const std::int64_t want = p == 2 ? ipow(2, n - 3) + 1 : (ipow(p, n - 2) + p - 2) / 2;
  const std::uint32_t got = group_norm(g, g.generators());
  chk.expect(got == want, "||G||_{a,b} = " + std::to_string(got) + ", expected " + std::to_string(want));
}

void decomposition(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const std::int64_t p = g.spec().p;
  const auto max_len = static_cast<std::uint64_t>(
      std::min<std::int64_t>(48, 2 * mnp_norm_bound(p, g.spec().n, false) + 4));
  const Element z = g.z();
  for (std::uint64_t k = 0; k < c.decomposition_sequences; ++k) {
    const std::uint64_t len = pick(rng, max_len + 1);
    std::vector<Element> factors;
    for (std::uint64_t f = 0; f < len; ++f) {
      const Element zr = g.power(z, pick(rng, static_cast<std::uint64_t>(p)));
      const Element base = [&] {
        switch (pick(rng, 4)) {
          case 0: return g.a();
          case 1: return g.inverse(g.a());
          case 2: return g.b();
          default: return g.inverse(g.b());
        }
      }();
      factors.push_back(g.multiply(zr, base));
    }
    const DecompositionWitness w = decompose_check(g, factors);
    chk.expect_lazy(w.holds, [&] {
      return "sequence " + show(factors) + " gives z^" + std::to_string(w.r) + " a^" +
             std::to_string(w.s0) + " b^" + std::to_string(w.t0) + " (s=" + std::to_string(w.s) +
             ", t=" + std::to_string(w.t) + ")";
    });
  }
}

void fixture_norms(const Group& g, const VerificationConfig& c, Rng& rng, Check& chk) {
  const std::int64_t ord = g.ord_a();
  std::vector<FixtureParams> params;
  if (exhaustive(g, c)) {
    for (std::int64_t v1 = 0; v1 < ord; v1 += 2)
      for (std::int64_t o1 = 1; o1 < ord; o1 += 2)
        for (std::int64_t o2 = 1; o2 < ord; o2 += 2) params.push_back({v1, o1, o2});
  } else {
    params.push_back({});
    for (int k = 0; k < 64; ++k) {
      const auto half = static_cast<std::uint64_t>(ord / 2);
      params.push_back({2 * static_cast<std::int64_t>(pick(rng, half)),
                        2 * static_cast<std::int64_t>(pick(rng, half)) + 1,
                        2 * static_cast<std::int64_t>(pick(rng, half)) + 1});
    }
  }
  for (int which = 1; which <= 3; ++which) {
    const std::int64_t want = fixture_expected_norm(g.spec(), which);
    std::vector<std::vector<Element>> seen;
    for (const FixtureParams& fp : params) {
      auto s = proof_fixture(g, which, fp);
      if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
      seen.push_back(s);
      const NormProfile pr = word_norms(g, s);
      chk.expect(pr.generates && static_cast<std::int64_t>(pr.max_finite) == want,
                 "S" + std::to_string(which) + " = " + show(s) + " has norm " +
                     (pr.generates ? std::to_string(pr.max_finite) : std::string("inf")) +
                     ", expected " + std::to_string(want));
    }
  }
}

void exhaustive_delta(const Group& g, const VerificationConfig& c, Check& chk) {
  if (!exhaustive(g, c)) return;
  DeltaOptions opts;
  opts.threads = c.threads;
  const DeltaReport rep = delta(g, opts);
  const DeltaEntry all = delta_n(g, class_pair_count(g), opts);
  chk.expect(all.value == rep.delta.value, "delta = " + std::to_string(rep.delta.value) +
                                               ", exhaustive = " + std::to_string(all.value));
  chk.expect(group_norm(g, rep.delta.witness) == rep.delta.value, "delta witness norm differs");
}

}  // namespace

std::string_view suite_name(Suite s) { return info(s).name; }

Suite parse_suite(std::string_view name) {
  for (const SuiteInfo& si : kSuites)
    if (si.name == name) return si.suite;
  throw Error(ErrorCode::InvalidSpec, "unknown suite '" + std::string(name) + "'");
}

bool suite_applies(Suite s, const GroupSpec& spec) {
  return info(s).families[static_cast<std::size_t>(spec.family)];
}

std::vector<Suite> applicable_suites(const GroupSpec& spec) {
  std::vector<Suite> out;
  for (const SuiteInfo& si : kSuites)
    if (si.families[static_cast<std::size_t>(spec.family)]) out.push_back(si.suite);
  return out;
}

SuiteResult run_lemma_suite(const Group& g, Suite suite, const VerificationConfig& config) {
  if (!suite_applies(suite, g.spec()))
    throw Error(ErrorCode::SuiteNotApplicable, std::string(suite_name(suite)) + " does not apply to " +
                                                   spec_label(g.spec()));
  Check chk;
  chk.result.suite = suite;
  Rng rng = make_rng(config.seed, g.spec(), suite);
  try {
    switch (suite) {
      case Suite::GroupAxioms: group_axioms(g, config, rng, chk); break;
      case Suite::TableAgreement: table_agreement(g, chk); break;
      case Suite::Presentation: presentation(g, chk); break;
      case Suite::TwistPower: twist_power(g, chk); break;
      case Suite::ConjugationShift: conjugation_shift(g, chk); break;
      case Suite::PowerFormula: power_formula(g, config, rng, chk); break;
      case Suite::SDClassFormula:
      case Suite::QClassFormula:
      case Suite::MnpClassFormula:
      case Suite::DihedralClassFormula: class_formula_suite(g, chk); break;
      case Suite::NormalSubgroups: normal_subgroups(g, chk); break;
      case Suite::FrattiniCenter: frattini_center(g, chk); break;
      case Suite::NormAxioms: norm_axioms(g, config, rng, chk); break;
      case Suite::NormInvariants: norm_invariants(g, config, rng, chk); break;
      case Suite::BallAdditivity: ball_additivity(g, config, rng, chk); break;
      case Suite::StructureLemma: structure_lemma(g, config, chk); break;
      case Suite::OrderElement: order_element(g, config, chk); break;
      case Suite::StandardPair: standard_pair(g, chk); break;
      case Suite::NormBound: norm_bound(g, chk); break;
      case Suite::LowerBound: lower_bound(g, chk); break;
      case Suite::Decomposition: decomposition(g, config, rng, chk); break;
      case Suite::FixtureNorms: fixture_norms(g, config, rng, chk); break;
      case Suite::ExhaustiveDelta: exhaustive_delta(g, config, chk); break;
    }
  } catch (const Error& e) {
    // A broken multiplication rule can make a library precondition fail;
    // that is a counterexample, not a crash.
    if (e.code() == ErrorCode::OrderCapExceeded) throw;
    chk.expect(false, std::string(to_string(e.code())) + ": " + e.what());
  }
  return chk.result;
}

namespace {

InstanceRecord verify_instance(const GroupSpec& spec, const VerificationConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Group g = build_group(spec);
  InstanceRecord rec;
  rec.spec = spec;
  rec.order = g.order();
  rec.classes = conjugacy_classes(g).count();

  DeltaOptions opts;
  opts.threads = config.threads;
  const DeltaReport rep = delta(g, opts);
  rec.delta = rep.delta.value;
  rec.predicted = rep.predicted.value_or(-1);
  rec.match = rep.match;
  try {
    rec.delta2 = delta_n(g, 2, opts).value;
    rec.delta2_equals_delta = rec.delta2 == rec.delta;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoGeneratingSet) throw;
  }

  const auto suites = config.suites.empty() ? applicable_suites(spec) : config.suites;
  for (Suite s : suites) {
    if (!suite_applies(s, spec)) continue;
    rec.suites.push_back(run_lemma_suite(g, s, config));
    (rec.suites.back().passed ? rec.suites_passed : rec.suites_failed) += 1;
  }
  if (config.record_timings)
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace

VerificationReport run_verification(const std::vector<GroupSpec>& grid, const VerificationConfig& config) {
  for (const GroupSpec& s : grid) {
    validate(s);
    if (group_order(s) > default_order_cap())
      throw Error(ErrorCode::OrderCapExceeded, spec_label(s) + " exceeds the order cap");
  }
  VerificationReport report;
  report.seed = config.seed;
  report.records.resize(grid.size());

  // Error propagation out of the parallel loop: keep the first one by index.
  std::vector<std::string> errors(grid.size());
  std::vector<int> codes(grid.size(), -1);
  const auto count = static_cast<std::int64_t>(grid.size());
#ifdef _OPENMP
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::int64_t k = 0; k < count; ++k) {
    try {
      report.records[static_cast<std::size_t>(k)] = verify_instance(grid[static_cast<std::size_t>(k)], config);
    } catch (const Error& e) {
      codes[static_cast<std::size_t>(k)] = static_cast<int>(e.code());
      errors[static_cast<std::size_t>(k)] = e.what();
    }
  }
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (codes[k] >= 0) throw Error(static_cast<ErrorCode>(codes[k]), errors[k]);

  std::sort(report.records.begin(), report.records.end(),
            [](const InstanceRecord& x, const InstanceRecord& y) { return x.spec < y.spec; });
  for (const InstanceRecord& r : report.records) report.pass = report.pass && r.passed();
  return report;
}

std::vector<GroupSpec> default_grid() {
  std::vector<GroupSpec> grid;
  for (std::int64_t n = 4; n <= 6; ++n) grid.push_back(GroupSpec::semidihedral(n));
  for (std::int64_t n = 3; n <= 6; ++n) grid.push_back(GroupSpec::quaternion(n));
  for (std::int64_t n = 4; n <= 6; ++n) grid.push_back(GroupSpec::modular(n, 2));
  grid.push_back(GroupSpec::modular(3, 3));
  grid.push_back(GroupSpec::modular(4, 3));
  grid.push_back(GroupSpec::modular(3, 5));
  grid.push_back(GroupSpec::modular(3, 7));
  for (std::int64_t n : {3, 4, 5, 6, 8, 9, 10}) grid.push_back(GroupSpec::dihedral(n));
  return grid;
}

std::string to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["version"] = VerificationReport::kVersion;
  j["seed"] = report.seed;
  j["records"] = nlohmann::ordered_json::array();
  for (const InstanceRecord& r : report.records) {
    nlohmann::ordered_json o;
    o["family"] = family_name(r.spec.family);
    o["n"] = r.spec.n;
    o["p"] = r.spec.p;
    o["label"] = spec_label(r.spec);
    o["order"] = r.order;
    o["classes"] = r.classes;
    o["delta"] = r.delta;
    o["predicted"] = r.predicted;
    o["match"] = r.match;
    o["delta2"] = r.delta2;
    o["delta2_equals_delta"] = r.delta2_equals_delta;
    o["suites_passed"] = r.suites_passed;
    o["suites_failed"] = r.suites_failed;
    o["suites"] = nlohmann::ordered_json::array();
    for (const SuiteResult& s : r.suites) {
      nlohmann::ordered_json so;
      so["name"] = suite_name(s.suite);
      so["passed"] = s.passed;
      so["checked"] = s.checked;
      so["failures"] = s.failures;
      if (!s.passed) so["counterexample"] = s.counterexample;
      o["suites"].push_back(std::move(so));
    }
    o["millis"] = r.millis;
    j["records"].push_back(std::move(o));
  }
  j["pass"] = report.pass;
  return j.dump(indent);
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "family,n,p,order,delta,predicted,match,millis\n";
  for (const InstanceRecord& r : report.records)
    out << family_name(r.spec.family) << ',' << r.spec.n << ',' << r.spec.p << ',' << r.order << ','
        << r.delta << ',' << r.predicted << ',' << (r.match ? "yes" : "no") << ','
        << static_cast<std::int64_t>(r.millis) << '\n';
  return out.str();
}

}  // namespace conjdiam
