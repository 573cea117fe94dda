#include "conjdiam/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

#include "conjdiam/error.hpp"

namespace conjdiam {

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < exp; ++k) {
    if (r > std::numeric_limits<std::int64_t>::max() / (base == 0 ? 1 : base))
      throw Error(ErrorCode::OrderCapExceeded, "exponent overflow in ipow");
    r *= base;
  }
  return r;
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Dihedral: return "dihedral";
    case Family::Semidihedral: return "semidihedral";
    case Family::Quaternion: return "quaternion";
    case Family::Modular: return "modular";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "d" || t == "dihedral") return Family::Dihedral;
  if (t == "sd" || t == "semidihedral") return Family::Semidihedral;
  if (t == "q" || t == "quaternion") return Family::Quaternion;
  if (t == "m" || t == "modular") return Family::Modular;
  throw Error(ErrorCode::InvalidSpec, "unknown family '" + std::string(text) + "'");
}

std::string spec_label(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::Dihedral: return "D_" + std::to_string(2 * spec.n);
    case Family::Semidihedral: return "SD_" + std::to_string(spec.n);
    case Family::Quaternion: return "Q_" + std::to_string(spec.n);
    case Family::Modular:
      return "M_" + std::to_string(spec.n) + "(" + std::to_string(spec.p) + ")";
  }
  return "?";
}

void validate(const GroupSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidSpec, spec_label(spec) + ": " + why);
  };
  switch (spec.family) {
    case Family::Dihedral:
      if (spec.n < 3) fail("dihedral groups need n >= 3");
      break;
    case Family::Semidihedral:
      if (spec.p != 2) fail("semidihedral groups are 2-groups");
      if (spec.n < 4) fail("semidihedral groups need n >= 4");
      break;
    case Family::Quaternion:
      if (spec.p != 2) fail("quaternion groups are 2-groups");
      if (spec.n < 3) fail("quaternion groups need n >= 3");
      break;
    case Family::Modular:
      if (spec.p < 2 || spec.p > (std::int64_t{1} << 21)) fail("p out of range");
      if (!is_prime(spec.p)) fail("p must be prime");
      if (spec.p == 2 && spec.n < 4) fail("modular 2-groups need n >= 4");
      if (spec.p != 2 && spec.n < 3) fail("modular p-groups need n >= 3");
      break;
  }
  if (spec.n > 62) fail("n too large");
  if (spec.family != Family::Dihedral) {
    std::int64_t order = 1;
    for (std::int64_t k = 0; k < spec.n; ++k) {
      if (order > (std::int64_t{1} << 62) / spec.p) fail("order overflows 64-bit integers");
      order *= spec.p;
    }
  }
}

std::int64_t group_order(const GroupSpec& spec) {
  validate(spec);
  if (spec.family == Family::Dihedral) return 2 * spec.n;
  return ipow(spec.p, spec.n);
}

std::int64_t default_order_cap() {
  if (const char* env = std::getenv("CONJDIAM_ORDER_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::int64_t{1} << 16;
}

Group::Group(const GroupSpec& spec, std::int64_t order_cap) : spec_(spec) {
  // group_order validates; the cap check precedes every allocation.
  const std::int64_t order = group_order(spec);
  if (order > order_cap)
    throw Error(ErrorCode::OrderCapExceeded, spec_label(spec) + " has order " +
                                                 std::to_string(order) + " > cap " +
                                                 std::to_string(order_cap));
  switch (spec.family) {
    case Family::Dihedral:
      ord_a_ = spec.n;
      ord_b_ = 2;
      action_ = ord_a_ - 1;
      z_exp_ = 0;
      break;
    case Family::Semidihedral:
      ord_a_ = ipow(2, spec.n - 1);
      ord_b_ = 2;
      action_ = ipow(2, spec.n - 2) - 1;
      z_exp_ = ipow(2, spec.n - 2);
      break;
    case Family::Quaternion:
      ord_a_ = ipow(2, spec.n - 1);
      ord_b_ = 2;
      action_ = ord_a_ - 1;
      fold_ = ipow(2, spec.n - 2);
      z_exp_ = fold_;
      break;
    case Family::Modular:
      ord_a_ = ipow(spec.p, spec.n - 1);
      ord_b_ = spec.p;
      z_exp_ = ipow(spec.p, spec.n - 2);
      action_ = 1 + z_exp_;
      break;
  }
  // t^{ord_b} == 1, so t^{-1} = t^{ord_b - 1}.
  twist_ = 1;
  for (std::int64_t k = 1; k < ord_b_; ++k) twist_ = twist_ * action_ % ord_a_;
  twist_pow_.assign(static_cast<std::size_t>(ord_b_ + 1), 1 % ord_a_);
  for (std::int64_t k = 1; k <= ord_b_; ++k)
    twist_pow_[k] = twist_pow_[k - 1] * twist_ % ord_a_;
}

Element Group::make(std::int64_t i, std::int64_t j) const {
  // b^j for j outside [0, ord_b) picks up the fold term.
  const std::int64_t q = j >= 0 ? j / ord_b_ : -((-j + ord_b_ - 1) / ord_b_);
  const std::int64_t jr = j - q * ord_b_;
  return {reduce_a(i + mod(q, ord_a_) * fold_), jr};
}

Element Group::multiply(const Element& x, const Element& y) const noexcept {
  std::int64_t i = x.i + y.i * twist_pow_[x.j] + shift_;
  std::int64_t j = x.j + y.j;
  if (j >= ord_b_) {
    j -= ord_b_;
    i += fold_;
  }
  return {reduce_a(i), j};
}

Element Group::inverse(const Element& x) const noexcept {
  if (x.j == 0) return {reduce_a(-x.i - shift_), 0};
  // y = a^k b^{ord_b - j}: x y = a^{x.i + k s^{j} + fold} = 1.
  const std::int64_t yj = ord_b_ - x.j;
  const std::int64_t k = reduce_a(-(x.i + fold_ + shift_)) * twist_pow_[yj] % ord_a_;
  return {reduce_a(k), yj};
}

Element Group::power(const Element& x, std::int64_t k) const noexcept {
  Element base = k < 0 ? inverse(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Element acc = identity();
  while (e != 0) {
    if (e & 1U) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return acc;
}

std::int64_t Group::order_of(const Element& x) const noexcept {
  Element acc = x;
  std::int64_t k = 1;
  const Element e = identity();
  while (acc != e && k <= order()) {
    acc = multiply(acc, x);
    ++k;
  }
  return k;
}

Element Group::conjugate(const Element& x, const Element& h) const noexcept {
  return multiply(multiply(inverse(h), x), h);
}

Element Group::commutator(const Element& x, const Element& y) const noexcept {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

Group Group::with_twist_override(std::int64_t twist) const {
  Group g = *this;
  g.twist_ = mod(twist, ord_a_);
  for (std::int64_t k = 1; k <= ord_b_; ++k)
    g.twist_pow_[k] = g.twist_pow_[k - 1] * g.twist_ % ord_a_;
  return g;
}

Group Group::with_fold_override(std::int64_t fold) const {
  Group g = *this;
  g.fold_ = mod(fold, ord_a_);
  return g;
}

Group Group::with_product_shift(std::int64_t shift) const {
  Group g = *this;
  g.shift_ = mod(shift, ord_a_);
  return g;
}

Group build_group(const GroupSpec& spec, std::int64_t order_cap) {
  return Group(spec, order_cap);
}

}  // namespace conjdiam
