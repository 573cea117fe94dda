#include "conjdiam/kernels.hpp"

#include <algorithm>
#include <bit>

#include "conjdiam/error.hpp"
#include "conjdiam/table_group.hpp"

namespace conjdiam {

ClassPairs class_pairs(const ClassDecomposition& classes) {
  ClassPairs out;
  std::vector<char> used(classes.count(), 0);
  used[0] = 1;  // {1}
  for (std::uint32_t c = 1; c < classes.count(); ++c) {
    if (used[c]) continue;
    const std::uint32_t ic = classes.inverse_class[c];
    used[c] = used[ic] = 1;
    std::vector<std::uint32_t> ids{c};
    if (ic != c) ids.push_back(ic);
    std::vector<std::uint32_t> members;
    for (std::uint32_t id : ids)
      members.insert(members.end(), classes.members[id].begin(), classes.members[id].end());
    std::sort(members.begin(), members.end());
    out.representative.push_back(members.front());
    out.classes.push_back(std::move(ids));
    out.members.push_back(std::move(members));
  }
  return out;
}

UnionValue ReferenceEvaluator::evaluate(std::span<const std::uint32_t> pair_ids) const {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t p : pair_ids)
    gens.insert(gens.end(), pairs_->members[p].begin(), pairs_->members[p].end());
  const auto dist = bfs_distances(*g_, gens);
  UnionValue v{true, 0};
  for (std::uint32_t d : dist) {
    if (d == NormProfile::kUnreachable)
      v.generates = false;
    else
      v.norm = std::max(v.norm, d);
  }
  return v;
}

std::uint64_t BitsetKernel::footprint(std::uint64_t order, std::uint64_t pairs) {
  return pairs * order * ((order + 63) / 64) * sizeof(std::uint64_t);
}

BitsetKernel::BitsetKernel(const Group& g, const ClassPairs& pairs)
    : order_(static_cast<std::size_t>(g.order())),
      words_((order_ + 63) / 64),
      pairs_(pairs.count()),
      identity_(g.index(g.identity())) {
  if (footprint(order_, pairs_) > (std::uint64_t{1} << 30))
    throw Error(ErrorCode::OrderCapExceeded, "bitset kernel tables exceed 1 GiB for " + spec_label(g.spec()));
  const auto table = multiplication_table(g);
  masks_.assign(pairs_ * order_ * words_, 0);
  for (std::size_t p = 0; p < pairs_; ++p) {
    for (std::size_t x = 0; x < order_; ++x) {
      std::uint64_t* row = masks_.data() + (p * order_ + x) * words_;
      for (std::uint32_t c : pairs.members[p]) {
        const std::uint32_t y = table[x * order_ + c];
        row[y >> 6U] |= std::uint64_t{1} << (y & 63U);
      }
    }
  }
}

void BitsetKernel::accumulate(std::span<std::uint64_t> table, std::uint32_t pair) const {
  const std::uint64_t* src = masks_.data() + static_cast<std::size_t>(pair) * order_ * words_;
  for (std::size_t k = 0; k < table.size(); ++k) table[k] |= src[k];
}

void BitsetKernel::accumulate(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                              std::uint32_t pair) const {
  const std::uint64_t* m = masks_.data() + static_cast<std::size_t>(pair) * order_ * words_;
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = src[k] | m[k];
}

UnionValue BitsetKernel::run(std::span<const std::uint64_t> table) const {
  // Small fixed buffers cover every group up to order 4096 without allocating.
  constexpr std::size_t kInline = 64;
  std::uint64_t inline_buf[3 * kInline];
  std::vector<std::uint64_t> heap;
  std::uint64_t* buf = inline_buf;
  if (words_ > kInline) {
    heap.assign(3 * words_, 0);
    buf = heap.data();
  }
  std::uint64_t* visited = buf;
  std::uint64_t* frontier = buf + words_;
  std::uint64_t* next = buf + 2 * words_;
  std::fill(buf, buf + 3 * words_, 0);
  visited[identity_ >> 6U] |= std::uint64_t{1} << (identity_ & 63U);
  frontier[identity_ >> 6U] = visited[identity_ >> 6U];

  std::size_t reached = 1;
  std::uint32_t depth = 0;
  for (;;) {
    std::fill(next, next + words_, 0);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits != 0) {
        const std::size_t x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* row = table.data() + x * words_;
        for (std::size_t k = 0; k < words_; ++k) next[k] |= row[k];
      }
    }
    std::size_t fresh = 0;
    for (std::size_t k = 0; k < words_; ++k) {
      next[k] &= ~visited[k];
      visited[k] |= next[k];
      fresh += static_cast<std::size_t>(std::popcount(next[k]));
    }
    if (fresh == 0) break;
    ++depth;
    reached += fresh;
    std::swap(frontier, next);
  }
  return {reached == order_, depth};
}

UnionValue BitsetKernel::evaluate(std::span<const std::uint32_t> pair_ids) const {
  auto table = make_table();
  for (std::uint32_t p : pair_ids) accumulate(table, p);
  return run(table);
}

}  // namespace conjdiam
