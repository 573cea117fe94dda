#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conjdiam {

enum class Family { Dihedral, Semidihedral, Quaternion, Modular };

/// Parameters of one of the four families.  For Dihedral, `n` is the
/// rotation order (D_2n has 2n elements); for the 2-group families `p` is 2.
struct GroupSpec {
  Family family = Family::Dihedral;
  std::int64_t n = 3;
  std::int64_t p = 2;

  static GroupSpec dihedral(std::int64_t n) { return {Family::Dihedral, n, 2}; }
  static GroupSpec semidihedral(std::int64_t n) { return {Family::Semidihedral, n, 2}; }
  static GroupSpec quaternion(std::int64_t n) { return {Family::Quaternion, n, 2}; }
  static GroupSpec modular(std::int64_t n, std::int64_t p) { return {Family::Modular, n, p}; }

  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws InvalidSpec when the family constraints on (n, p) are violated.
void validate(const GroupSpec& spec);

/// Order of the group described by `spec` (validated first).
std::int64_t group_order(const GroupSpec& spec);

std::string family_name(Family f);
/// Accepts d/dihedral, sd/semidihedral, q/quaternion, m/modular.
Family parse_family(std::string_view text);
/// Human label such as "SD_5", "Q_3", "M_4(2)", "D_12".
std::string spec_label(const GroupSpec& spec);

/// Normal form a^i b^j with 0 <= i < ord(a), 0 <= j < ord_b.
struct Element {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Default cap on |G|: 2^16, or CONJDIAM_ORDER_CAP when set in the environment.
std::int64_t default_order_cap();

/// Twisted-product realization of one family presentation.  Elements are
/// pairs (i, j); the b-action on <a> is b a^k b^{-1} = a^{k s}, where s is
/// the inverse of the action exponent t (b^{-1} a b = a^t).  For Quaternion
/// the b^2 = a^{2^{n-2}} relation is folded into the a-part.
///
/// Immutable after construction.
class Group {
 public:
  explicit Group(const GroupSpec& spec, std::int64_t order_cap = default_order_cap());

  const GroupSpec& spec() const noexcept { return spec_; }
  std::int64_t order() const noexcept { return ord_a_ * ord_b_; }
  std::int64_t ord_a() const noexcept { return ord_a_; }
  std::int64_t ord_b() const noexcept { return ord_b_; }
  /// t with b^{-1} a b = a^t, reduced mod ord(a).
  std::int64_t action_exponent() const noexcept { return action_; }
  /// s = t^{-1} mod ord(a), the exponent used by the multiplication rule.
  std::int64_t twist() const noexcept { return twist_; }
  /// Value of b^{ord_b} in <a>: a^{2^{n-2}} for Quaternion, 1 otherwise.
  std::int64_t fold() const noexcept { return fold_; }
  /// p^{n-2}, the exponent of z.  Meaningful for every family; z itself is
  /// only named in the Modular lemmas.
  std::int64_t z_exponent() const noexcept { return z_exp_; }

  Element identity() const noexcept { return {0, 0}; }
  Element a() const noexcept { return {ord_a_ > 1 ? 1 : 0, 0}; }
  Element b() const noexcept { return {0, 1}; }
  Element z() const noexcept { return {z_exp_ % ord_a_, 0}; }
  /// a^i b^j for arbitrary integers, reduced to normal form.
  Element make(std::int64_t i, std::int64_t j = 0) const;

  bool valid(const Element& x) const noexcept {
    return x.i >= 0 && x.i < ord_a_ && x.j >= 0 && x.j < ord_b_;
  }

  std::uint32_t index(const Element& x) const noexcept {
    return static_cast<std::uint32_t>(x.i * ord_b_ + x.j);
  }
  Element element(std::uint32_t idx) const noexcept {
    return {static_cast<std::int64_t>(idx) / ord_b_, static_cast<std::int64_t>(idx) % ord_b_};
  }

  Element multiply(const Element& x, const Element& y) const noexcept;
  Element inverse(const Element& x) const noexcept;
  /// x^k for any integer k (negative via the inverse), by square-and-multiply.
  Element power(const Element& x, std::int64_t k) const noexcept;
  std::int64_t order_of(const Element& x) const noexcept;
  /// h^{-1} x h.
  Element conjugate(const Element& x, const Element& h) const noexcept;
  /// x^{-1} y^{-1} x y.
  Element commutator(const Element& x, const Element& y) const noexcept;

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
    return index(multiply(element(x), element(y)));
  }
  std::uint32_t inv(std::uint32_t x) const noexcept { return index(inverse(element(x))); }

  /// Generators of G as a group: {a, b}.
  std::vector<Element> generators() const { return {a(), b()}; }

  /// Test hook: replaces the twist exponent.  The result is generally not
  /// a realization of the presentation; used to check that the verification
  /// suites notice a broken multiplication rule.
  Group with_twist_override(std::int64_t twist) const;
  /// Test hook: drops the Quaternion b^2 folding.
  Group with_fold_override(std::int64_t fold) const;
  /// Test hook: multiply() adds `shift` to the a-exponent of every product.
  Group with_product_shift(std::int64_t shift) const;

 private:
  std::int64_t reduce_a(std::int64_t v) const noexcept {
    v %= ord_a_;
    return v < 0 ? v + ord_a_ : v;
  }

  GroupSpec spec_;
  std::int64_t ord_a_ = 1;
  std::int64_t ord_b_ = 1;
  std::int64_t action_ = 1;
  std::int64_t twist_ = 1;
  std::int64_t fold_ = 0;
  std::int64_t z_exp_ = 0;
  std::int64_t shift_ = 0;
  std::vector<std::int64_t> twist_pow_;  // s^j mod ord(a), 0 <= j <= ord_b
};

/// Validates `spec` and builds the group; OrderCapExceeded when |G| > cap.
Group build_group(const GroupSpec& spec, std::int64_t order_cap = default_order_cap());

std::int64_t ipow(std::int64_t base, std::int64_t exp);
std::int64_t mod(std::int64_t v, std::int64_t m);
bool is_prime(std::int64_t v);

}  // namespace conjdiam
