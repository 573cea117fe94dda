#include "conjdiam/table_group.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "conjdiam/error.hpp"

namespace conjdiam {

TableGroup::TableGroup(std::uint32_t order, std::vector<std::uint32_t> table,
                       std::uint64_t exhaustive_limit, std::uint64_t samples)
    : order_(order), table_(std::move(table)) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::InvalidSpec, "table is not a group: " + why);
  };
  if (order_ == 0) fail("empty");
  if (table_.size() != static_cast<std::size_t>(order_) * order_) fail("wrong table size");
  for (std::uint32_t v : table_)
    if (v >= order_) fail("entry out of range");

  bool found = false;
  for (std::uint32_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < order_ && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) fail("no identity");

  inverse_.assign(order_, order_);
  for (std::uint32_t x = 0; x < order_; ++x) {
    for (std::uint32_t y = 0; y < order_; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverse_[x] = y;
        break;
      }
    }
    if (inverse_[x] == order_) fail("element " + std::to_string(x) + " has no inverse");
  }

  const std::uint64_t n = order_;
  if (n * n * n <= exhaustive_limit) {
    for (std::uint32_t x = 0; x < order_; ++x)
      for (std::uint32_t y = 0; y < order_; ++y) {
        const std::uint32_t xy = mul(x, y);
        for (std::uint32_t w = 0; w < order_; ++w)
          if (mul(xy, w) != mul(x, mul(y, w))) fail("associativity");
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, order_ - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::uint32_t x = pick(rng), y = pick(rng), w = pick(rng);
      if (mul(mul(x, y), w) != mul(x, mul(y, w))) fail("associativity");
    }
  }
}

std::vector<std::uint32_t> TableGroup::conjugacy_class(std::uint32_t x) const {
  std::vector<char> seen(order_, 0);
  std::vector<std::uint32_t> out;
  for (std::uint32_t h = 0; h < order_; ++h) {
    const std::uint32_t c = conjugate(x, h);
    if (!seen[c]) {
      seen[c] = 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> TableGroup::class_ids() const {
  std::vector<std::uint32_t> id(order_, order_);
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (id[x] != order_) continue;
    for (std::uint32_t c : conjugacy_class(x)) id[c] = next;
    ++next;
  }
  return id;
}

std::vector<std::uint32_t> TableGroup::center() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < order_; ++x) {
    bool central = true;
    for (std::uint32_t y = 0; y < order_ && central; ++y) central = mul(x, y) == mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> TableGroup::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<std::uint32_t> members{identity_};
  in[identity_] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::uint32_t g : gens) {
      const std::uint32_t y = mul(members[k], g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint32_t TableGroup::element_order(std::uint32_t x) const noexcept {
  std::uint32_t k = 1;
  for (std::uint32_t acc = x; acc != identity_; acc = mul(acc, x)) ++k;
  return k;
}

std::vector<std::uint32_t> multiplication_table(const Group& g, std::uint64_t max_entries) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n * n > max_entries)
    throw Error(ErrorCode::OrderCapExceeded,
                "multiplication table for order " + std::to_string(n) + " is too large");
  std::vector<std::uint32_t> table(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const Element ex = g.element(x);
    for (std::uint32_t y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] = g.index(g.multiply(ex, g.element(y)));
  }
  return table;
}

namespace {

// Monomial k x k matrix with entries that are powers of a primitive
// ord_a-th root of unity zeta: column r maps to zeta^{exp[r]} e_{perm[r]}.
struct Monomial {
  std::vector<std::int64_t> perm;
  std::vector<std::int64_t> exp;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial compose(const Monomial& x, const Monomial& y, std::int64_t m) {
  const std::size_t k = x.perm.size();
  Monomial out{std::vector<std::int64_t>(k), std::vector<std::int64_t>(k)};
  for (std::size_t r = 0; r < k; ++r) {
    const auto mid = static_cast<std::size_t>(y.perm[r]);
    out.perm[r] = x.perm[mid];
    out.exp[r] = (y.exp[r] + x.exp[mid]) % m;
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> presentation_table(const GroupSpec& spec, std::uint64_t max_entries) {
  validate(spec);
  std::int64_t ord_a = 0, ord_b = 2, t = 0, fold = 0;
  switch (spec.family) {
    case Family::Dihedral:
      ord_a = spec.n;
      t = spec.n - 1;
      break;
    case Family::Semidihedral:
      ord_a = ipow(2, spec.n - 1);
      t = ipow(2, spec.n - 2) - 1;
      break;
    case Family::Quaternion:
      ord_a = ipow(2, spec.n - 1);
      t = ord_a - 1;
      fold = ipow(2, spec.n - 2);
      break;
    case Family::Modular:
      ord_a = ipow(spec.p, spec.n - 1);
      ord_b = spec.p;
      t = 1 + ipow(spec.p, spec.n - 2);
      break;
  }
  const auto order = static_cast<std::uint64_t>(ord_a * ord_b);
  if (order * order > max_entries)
    throw Error(ErrorCode::OrderCapExceeded,
                "multiplication table for order " + std::to_string(order) + " is too large");

  // Induced representation from <a>: A = diag(zeta^{t^r}), B shifts e_r to
  // e_{r+1} and sends e_{k-1} to zeta^{fold} e_0.
  const auto k = static_cast<std::size_t>(ord_b);
  Monomial A{std::vector<std::int64_t>(k), std::vector<std::int64_t>(k)};
  Monomial B = A;
  Monomial I = A;
  std::vector<std::int64_t> tpow(k + 1, 1 % ord_a);
  for (std::size_t r = 0; r < k; ++r) {
    tpow[r + 1] = mod(tpow[r] * t, ord_a);
    A.perm[r] = static_cast<std::int64_t>(r);
    A.exp[r] = tpow[r];
    I.perm[r] = static_cast<std::int64_t>(r);
    B.perm[r] = static_cast<std::int64_t>((r + 1) % k);
    B.exp[r] = r + 1 == k ? fold % ord_a : 0;
  }

  // Element index i * ord_b + j is A^i B^j.
  std::vector<Monomial> mats(order);
  Monomial ai = I;
  for (std::int64_t i = 0; i < ord_a; ++i) {
    Monomial cur = ai;
    for (std::int64_t j = 0; j < ord_b; ++j) {
      mats[static_cast<std::size_t>(i * ord_b + j)] = cur;
      cur = compose(cur, B, ord_a);
    }
    ai = compose(ai, A, ord_a);
  }

  // A^i B^j sends e_0 to zeta^{i t^j} e_j, which determines (i, j).
  std::vector<std::int64_t> tinv(k);
  for (std::size_t j = 0; j < k; ++j) {
    tinv[j] = -1;
    for (std::int64_t u = 0; u < ord_a; ++u)
      if (mod(u * tpow[j], ord_a) == 1 % ord_a) {
        tinv[j] = u;
        break;
      }
    if (tinv[j] < 0) throw Error(ErrorCode::InvalidSpec, "action exponent is not a unit");
  }
  auto decode = [&](const Monomial& m) -> std::uint32_t {
    const auto j = static_cast<std::size_t>(m.perm[0]);
    const std::int64_t i = mod(m.exp[0] * tinv[j], ord_a);
    const auto idx = static_cast<std::uint32_t>(i * ord_b + static_cast<std::int64_t>(j));
    if (!(mats[idx] == m))
      throw Error(ErrorCode::InvalidSpec, "monomial realization is not closed");
    return idx;
  };
  for (std::uint32_t x = 0; x < order; ++x)
    if (decode(mats[x]) != x)
      throw Error(ErrorCode::InvalidSpec, "monomial realization is not faithful");

  std::vector<std::uint32_t> table(order * order);
  for (std::uint32_t x = 0; x < order; ++x)
    for (std::uint32_t y = 0; y < order; ++y)
      table[static_cast<std::size_t>(x) * order + y] = decode(compose(mats[x], mats[y], ord_a));
  return table;
}

TableGroup build_table_group(const GroupSpec& spec) {
  return TableGroup(static_cast<std::uint32_t>(group_order(spec)), presentation_table(spec));
}

TableGroup build_table_group(const Group& g) { return build_table_group(g.spec()); }

TableGroup cyclic_table_group(std::uint32_t m) {
  std::vector<std::uint32_t> table(static_cast<std::size_t>(m) * m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) table[static_cast<std::size_t>(x) * m + y] = (x + y) % m;
  return TableGroup(m, std::move(table));
}

}  // namespace conjdiam
