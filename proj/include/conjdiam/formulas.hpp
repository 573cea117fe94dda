#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conjdiam/group.hpp"

namespace conjdiam {

// Closed forms for the four families, written independently of the search
// code so that each can be checked against brute force.

/// Closed-form conjugacy diameter of each family.
///   SD_n: 2 (n = 4), 3 (n >= 5)        Q_n: 2 (n = 3), 3 (n >= 4)
///   M_n(2): 2^{n-3} + 1                M_n(p), p odd: (p^{n-2} + p - 2) / 2
///   D_2n: 2 (n odd, or n = 4), 3 (n even, n >= 6)
std::int64_t predicted_delta(const GroupSpec& spec);

/// Conjugacy class of e in SD_n, from the class formulas:
/// a^m -> {a^m, (a^{-1+2^{n-2}})^m}; a^m b -> all a^r b with r = m mod 2.
std::vector<Element> sd_class_of(std::int64_t n, const Element& e);
/// Conjugacy class of e in Q_n: a^m -> {a^m, a^{-m}}; a^m b as for SD_n.
std::vector<Element> q_class_of(std::int64_t n, const Element& e);
/// Conjugacy class of e in M_n(p): {z^r e : 0 <= r < p}, or {e} when e is central.
std::vector<Element> mnp_class_of(std::int64_t p, std::int64_t n, const Element& e);
/// Conjugacy class of e in D_2n: a^m -> {a^m, a^{-m}}; reflections form one
/// class for odd n and two parity classes for even n.
std::vector<Element> dihedral_class_of(std::int64_t n, const Element& e);
/// Dispatches on the family.  Result is sorted by (i, j).
std::vector<Element> class_formula(const GroupSpec& spec, const Element& e);

/// (a^{-1+2^{n-2}})^m in SD_n via the parity rule: a^{-m} for even m,
/// a^{-m+2^{n-2}} for odd m.  Returns the a-exponent mod 2^{n-1}.
std::int64_t sd_twist_power(std::int64_t n, std::int64_t m);

/// (a^l b^j)^k = a^{kl} b^{kj} z^{-k(k-1)/2 jl} in M_n(p), k >= 1.
Element mnp_power(std::int64_t p, std::int64_t n, std::int64_t l, std::int64_t j, std::int64_t k);

/// A pair satisfying the family's defining relations, with what was checked.
struct GeneratorPair {
  Element x;
  Element y;
  std::int64_t order_x = 0;
  std::int64_t order_y = 0;
  /// e with y^{-1} x y = x^e.
  std::int64_t conjugation_exponent = 0;
};

/// Checks the defining relations of the family on (x, y).
bool is_standard_pair(const Group& g, const Element& x, const Element& y);

/// Exhaustive search for y making (x, y) a standard generator pair.  When x
/// is not given, the first element of order ord(a) is used.  Throws NotFound
/// when no pair exists.
GeneratorPair find_standard_pair(const Group& g, std::optional<Element> x = std::nullopt);

/// The map (i, j) -> x^i y^j on element indices.  When (x, y) is a standard
/// pair this is an automorphism of g.
std::vector<std::uint32_t> recoordinatize(const Group& g, const GeneratorPair& pair);
/// True when recoordinatize() is a bijection that respects multiplication.
bool recoordinatization_is_isomorphism(const Group& g, const GeneratorPair& pair);

/// Upper bound on ||g||_S in M_n(p) for S = {a, a^l b^j}, for g inside
/// <a> (`on_torus`) or outside it.
std::int64_t mnp_norm_bound(std::int64_t p, std::int64_t n, bool on_torus);

/// Result of multiplying out a word over X1 = <z>{a, a^{-1}} and
/// X2 = <z>{b, b^{-1}}, tracked as z^r a^{s0} b^{t0} with integer s0, t0.
struct DecompositionWitness {
  std::vector<Element> factors;
  std::int64_t s = 0;  // factors from X1
  std::int64_t t = 0;  // factors from X2
  std::int64_t r = 0;
  std::int64_t s0 = 0;
  std::int64_t t0 = 0;
  Element product;
  /// |s0| <= s, |t0| <= t and z^r a^{s0} b^{t0} equals the product.
  bool holds = false;
};

/// Throws FactorNotInX for a factor outside X1 ∪ X2; InvalidSpec unless g
/// is modular.
DecompositionWitness decompose_check(const Group& g, std::span<const Element> factors);

/// The two-element sets from the SD_n/Q_n case analysis:
///   S1 = {a^{v1} b, a^{o1}}, S2 = {a^{o2} b, a^{o1}}, S3 = {a^{o2} b, a^{v1} b}
/// with v1 even and o1, o2 odd.
struct FixtureParams {
  std::int64_t v1 = 0;
  std::int64_t o1 = 1;
  std::int64_t o2 = 1;
};
std::vector<Element> proof_fixture(const Group& g, int which, const FixtureParams& params = {});
/// ||G||_{S_which} according to the case tables: S1, S2 give 2 for the
/// smallest member of the family (SD_4, Q_3) and 3 otherwise; S3 gives 2.
std::int64_t fixture_expected_norm(const GroupSpec& spec, int which);

}  // namespace conjdiam
