#include "conjdiam/formulas.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "conjdiam/error.hpp"

namespace conjdiam {

namespace {

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
  return mod(static_cast<std::int64_t>(static_cast<__int128>(mod(x, m)) * mod(y, m) % m), m);
}

void sort_unique(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// All a^r b with r of the given parity, r in [0, ord).
std::vector<Element> b_coset_parity(std::int64_t ord, std::int64_t parity) {
  std::vector<Element> out;
  for (std::int64_t r = parity; r < ord; r += 2) out.push_back({r, 1});
  return out;
}

void require(bool ok, const std::string& why) {
  if (!ok) throw Error(ErrorCode::InvalidSpec, why);
}

}  // namespace

std::int64_t predicted_delta(const GroupSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Semidihedral: return spec.n == 4 ? 2 : 3;
    case Family::Quaternion: return spec.n == 3 ? 2 : 3;
    case Family::Modular:
      if (spec.p == 2) return ipow(2, spec.n - 3) + 1;
      return (ipow(spec.p, spec.n - 2) + spec.p - 2) / 2;
    case Family::Dihedral:
      if (spec.n % 2 == 1 || spec.n == 4) return 2;
      return 3;
  }
  return 0;
}

std::int64_t sd_twist_power(std::int64_t n, std::int64_t m) {
  const std::int64_t ord = ipow(2, n - 1);
  if (mod(m, 2) == 0) return mod(-m, ord);
  return mod(-m + ipow(2, n - 2), ord);
}

std::vector<Element> sd_class_of(std::int64_t n, const Element& e) {
  require(n >= 4, "SD_n needs n >= 4");
  const std::int64_t ord = ipow(2, n - 1);
  const std::int64_t m = mod(e.i, ord);
  std::vector<Element> out;
  if (mod(e.j, 2) == 0)
    out = {{m, 0}, {sd_twist_power(n, m), 0}};
  else
    out = b_coset_parity(ord, m % 2);
  sort_unique(out);
  return out;
}

std::vector<Element> q_class_of(std::int64_t n, const Element& e) {
  require(n >= 3, "Q_n needs n >= 3");
  const std::int64_t ord = ipow(2, n - 1);
  const std::int64_t m = mod(e.i, ord);
  std::vector<Element> out;
  if (mod(e.j, 2) == 0)
    out = {{m, 0}, {mod(-m, ord), 0}};
  else
    out = b_coset_parity(ord, m % 2);
  sort_unique(out);
  return out;
}

std::vector<Element> mnp_class_of(std::int64_t p, std::int64_t n, const Element& e) {
  validate(GroupSpec::modular(n, p));
  const std::int64_t ord = ipow(p, n - 1);
  const std::int64_t q = ipow(p, n - 2);
  const Element x{mod(e.i, ord), mod(e.j, p)};
  // Z(G) = <a^p>.
  if (x.j == 0 && x.i % p == 0) return {x};
  std::vector<Element> out;
  for (std::int64_t r = 0; r < p; ++r) out.push_back({mod(x.i + r * q, ord), x.j});
  sort_unique(out);
  return out;
}

std::vector<Element> dihedral_class_of(std::int64_t n, const Element& e) {
  require(n >= 3, "D_2n needs n >= 3");
  const std::int64_t m = mod(e.i, n);
  std::vector<Element> out;
  if (mod(e.j, 2) == 0) {
    out = {{m, 0}, {mod(-m, n), 0}};
  } else if (n % 2 == 1) {
    for (std::int64_t r = 0; r < n; ++r) out.push_back({r, 1});
  } else {
    out = b_coset_parity(n, m % 2);
  }
  sort_unique(out);
  return out;
}

std::vector<Element> class_formula(const GroupSpec& spec, const Element& e) {
  switch (spec.family) {
    case Family::Semidihedral: return sd_class_of(spec.n, e);
    case Family::Quaternion: return q_class_of(spec.n, e);
    case Family::Modular: return mnp_class_of(spec.p, spec.n, e);
    case Family::Dihedral: return dihedral_class_of(spec.n, e);
  }
  return {};
}

Element mnp_power(std::int64_t p, std::int64_t n, std::int64_t l, std::int64_t j, std::int64_t k) {
  validate(GroupSpec::modular(n, p));
  require(k >= 1, "mnp_power needs k >= 1");
  const std::int64_t ord = ipow(p, n - 1);
  const std::int64_t q = ipow(p, n - 2);
  // k(k-1)/2 is an integer before any reduction.
  const std::int64_t tri = mod(k % 2 == 0 ? (k / 2) * (k - 1) : k * ((k - 1) / 2), ord);
  const std::int64_t z_exp = mod(-mulmod(tri, mulmod(j, l, ord), ord), ord);
  const std::int64_t i = mod(mulmod(k, l, ord) + mulmod(z_exp, q, ord), ord);
  return {i, mod(mulmod(k, j, p), p)};
}

bool is_standard_pair(const Group& g, const Element& x, const Element& y) {
  const GroupSpec& s = g.spec();
  const std::int64_t ox = g.order_of(x);
  if (ox != g.ord_a()) return false;
  const Element conj = g.conjugate(x, y);
  switch (s.family) {
    case Family::Dihedral:
      return g.order_of(y) == 2 && conj == g.inverse(x);
    case Family::Semidihedral:
      return g.order_of(y) == 2 && conj == g.power(x, ipow(2, s.n - 2) - 1);
    case Family::Quaternion:
      return g.power(y, 2) == g.power(x, ipow(2, s.n - 2)) && conj == g.inverse(x);
    case Family::Modular:
      return g.order_of(y) == s.p && conj == g.power(x, ipow(s.p, s.n - 2) + 1);
  }
  return false;
}

GeneratorPair find_standard_pair(const Group& g, std::optional<Element> x) {
  if (!x) {
    for (std::uint32_t idx = 0; idx < g.order() && !x; ++idx)
      if (g.order_of(g.element(idx)) == g.ord_a()) x = g.element(idx);
    if (!x) throw Error(ErrorCode::NotFound, "no element of maximal cyclic order");
  }
  if (!g.valid(*x)) throw Error(ErrorCode::NotFound, "x is not a normal form of this group");
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    const Element y = g.element(idx);
    if (!is_standard_pair(g, *x, y)) continue;
    GeneratorPair pair{*x, y, g.order_of(*x), g.order_of(y), -1};
    const Element conj = g.conjugate(*x, y);
    Element acc = g.identity();
    for (std::int64_t e = 0; e < pair.order_x; ++e, acc = g.multiply(acc, *x)) {
      if (acc == conj) {
        pair.conjugation_exponent = e;
        break;
      }
    }
    return pair;
  }
  throw Error(ErrorCode::NotFound, "no y completes a standard generator pair in " + spec_label(g.spec()));
}

std::vector<std::uint32_t> recoordinatize(const Group& g, const GeneratorPair& pair) {
  std::vector<std::uint32_t> map(static_cast<std::size_t>(g.order()));
  for (std::uint32_t idx = 0; idx < g.order(); ++idx) {
    const Element e = g.element(idx);
    map[idx] = g.index(g.multiply(g.power(pair.x, e.i), g.power(pair.y, e.j)));
  }
  return map;
}

bool recoordinatization_is_isomorphism(const Group& g, const GeneratorPair& pair) {
  const auto map = recoordinatize(g, pair);
  std::vector<char> hit(map.size(), 0);
  for (std::uint32_t v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  for (std::uint32_t u = 0; u < g.order(); ++u)
    for (std::uint32_t v = 0; v < g.order(); ++v)
      if (map[g.mul(u, v)] != g.mul(map[u], map[v])) return false;
  return true;
}

std::int64_t mnp_norm_bound(std::int64_t p, std::int64_t n, bool on_torus) {
  validate(GroupSpec::modular(n, p));
  if (p == 2) return ipow(2, n - 3) + (on_torus ? 0 : 1);
  if (p == 3 && n == 3) return 2;
  const std::int64_t q = ipow(p, n - 2);
  return on_torus ? (q - 1) / 2 : (q + p - 2) / 2;
}

DecompositionWitness decompose_check(const Group& g, std::span<const Element> factors) {
  const GroupSpec& spec = g.spec();
  if (spec.family != Family::Modular)
    throw Error(ErrorCode::InvalidSpec, "the X1/X2 decomposition is defined for modular groups");
  const std::int64_t p = spec.p;
  const std::int64_t q = g.z_exponent();
  const std::int64_t ord = g.ord_a();

  DecompositionWitness w;
  w.factors.assign(factors.begin(), factors.end());
  w.product = g.identity();
  for (const Element& f : factors) {
    if (!g.valid(f)) throw Error(ErrorCode::FactorNotInX, "factor is not a normal form");
    if (f.j == 0 && mod(f.i - 1, ord) % q == 0) {
      // z^{r''} a: b^{t0} a = z^{-t0} a b^{t0}
      w.r += mod(f.i - 1, ord) / q - w.t0;
      w.s0 += 1;
      ++w.s;
    } else if (f.j == 0 && mod(f.i + 1, ord) % q == 0) {
      // z^{r''} a^{-1}: b^{t0} a^{-1} = z^{t0} a^{-1} b^{t0}
      w.r += mod(f.i + 1, ord) / q + w.t0;
      w.s0 -= 1;
      ++w.s;
    } else if ((f.j == 1 || f.j == p - 1) && f.i % q == 0) {
      w.r += f.i / q;
      w.t0 += f.j == 1 ? 1 : -1;
      ++w.t;
    } else {
      throw Error(ErrorCode::FactorNotInX, "factor a^" + std::to_string(f.i) + " b^" +
                                                std::to_string(f.j) + " is not in X1 or X2");
    }
    w.r = mod(w.r, p);
    w.product = g.multiply(w.product, f);
  }
  const Element form =
      g.multiply(g.multiply(g.power(g.z(), w.r), g.power(g.a(), w.s0)), g.power(g.b(), w.t0));
  w.holds = std::abs(w.s0) <= w.s && std::abs(w.t0) <= w.t && form == w.product;
  return w;
}

std::vector<Element> proof_fixture(const Group& g, int which, const FixtureParams& params) {
  const GroupSpec& s = g.spec();
  require(s.family == Family::Semidihedral || s.family == Family::Quaternion,
          "proof fixtures exist for SD_n and Q_n only");
  require(mod(params.v1, 2) == 0, "v1 must be even");
  require(mod(params.o1, 2) == 1 && mod(params.o2, 2) == 1, "o1 and o2 must be odd");
  const Element v1b = g.make(params.v1, 1);
  const Element o1 = g.make(params.o1, 0);
  const Element o2b = g.make(params.o2, 1);
  switch (which) {
    case 1: return {v1b, o1};
    case 2: return {o2b, o1};
    case 3: return {o2b, v1b};
    default: break;
  }
  throw Error(ErrorCode::InvalidSpec, "fixture index must be 1, 2 or 3");
}

std::int64_t fixture_expected_norm(const GroupSpec& spec, int which) {
  validate(spec);
  require(spec.family == Family::Semidihedral || spec.family == Family::Quaternion,
          "proof fixtures exist for SD_n and Q_n only");
  require(which >= 1 && which <= 3, "fixture index must be 1, 2 or 3");
  if (which == 3) return 2;
  const std::int64_t smallest = spec.family == Family::Semidihedral ? 4 : 3;
  return spec.n == smallest ? 2 : 3;
}

}  // namespace conjdiam
