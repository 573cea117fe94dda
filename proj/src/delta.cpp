#include "conjdiam/delta.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <variant>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "conjdiam/error.hpp"
#include "conjdiam/formulas.hpp"
#include "conjdiam/kernels.hpp"
#include "conjdiam/norm.hpp"

namespace conjdiam {

namespace {

using Union = std::vector<std::uint32_t>;

// Running maximum with deterministic tie-breaking on the witness.
struct Best {
  bool found = false;
  std::uint32_t value = 0;
  std::vector<std::uint32_t> witness;  // element indices
  std::uint64_t candidates = 0;
  std::uint64_t generating = 0;

  void offer(std::uint32_t v, std::vector<std::uint32_t> w) {
    if (!found || v > value || (v == value && w < witness)) {
      found = true;
      value = v;
      witness = std::move(w);
    }
  }
  void merge(const Best& o) {
    candidates += o.candidates;
    generating += o.generating;
    if (o.found) offer(o.value, o.witness);
  }
};

std::vector<std::uint32_t> witness_of(const ClassPairs& pairs, const Union& u) {
  std::vector<std::uint32_t> w;
  for (std::uint32_t p : u) w.push_back(pairs.representative[p]);
  std::sort(w.begin(), w.end());
  return w;
}

DeltaEntry to_entry(const Group& g, const Best& b, std::size_t n) {
  DeltaEntry e;
  e.max_set_size = n;
  e.value = b.value;
  for (std::uint32_t x : b.witness) e.witness.push_back(g.element(x));
  e.candidates = b.candidates;
  e.generating = b.generating;
  return e;
}

int thread_count(const DeltaOptions& opts) {
#ifdef _OPENMP
  return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
  (void)opts;
  return 1;
#endif
}

// Evaluates every candidate, in parallel unless the reference path is used.
std::vector<UnionValue> evaluate_all(const std::vector<Union>& cands, const Group& g,
                                     const ClassPairs& pairs, const BitsetKernel* kernel,
                                     const DeltaOptions& opts) {
  std::vector<UnionValue> out(cands.size());
  if (kernel == nullptr) {
    const ReferenceEvaluator ref(g, pairs);
    for (std::size_t k = 0; k < cands.size(); ++k) out[k] = ref.evaluate(cands[k]);
    return out;
  }
  const auto n = static_cast<std::int64_t>(cands.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(opts))
  for (std::int64_t k = 0; k < n; ++k) out[k] = kernel->evaluate(cands[k]);
  return out;
}

std::unique_ptr<BitsetKernel> make_kernel(const Group& g, const ClassPairs& pairs,
                                          const DeltaOptions& opts) {
  if (opts.reference) return nullptr;
  return std::make_unique<BitsetKernel>(g, pairs);
}

// Depth-first walk over all unions of at most `limit` pairs whose smallest
// pair is `first`, with the combined mask table extended one pair per level.
void exhaustive_from(const BitsetKernel& kernel, const ClassPairs& pairs, std::uint32_t first,
                     std::size_t limit, Best& best) {
  const auto m = static_cast<std::uint32_t>(pairs.count());
  std::vector<std::vector<std::uint64_t>> tables(limit + 1, kernel.make_table());
  Union u{first};
  kernel.accumulate(tables[1], tables[0], first);
  // stack of next choice per depth
  std::vector<std::uint32_t> next{first + 1};
  auto visit = [&](const std::vector<std::uint64_t>& table) {
    const UnionValue v = kernel.run(table);
    ++best.candidates;
    if (v.generates) {
      ++best.generating;
      best.offer(v.norm, witness_of(pairs, u));
    }
  };
  visit(tables[1]);
  while (!u.empty()) {
    std::uint32_t& c = next.back();
    if (u.size() < limit && c < m) {
      const std::uint32_t pick = c++;
      kernel.accumulate(tables[u.size() + 1], tables[u.size()], pick);
      u.push_back(pick);
      next.push_back(pick + 1);
      visit(tables[u.size()]);
    } else {
      u.pop_back();
      next.pop_back();
    }
  }
}

void exhaustive_reference(const Group& g, const ClassPairs& pairs, std::size_t limit, Best& best) {
  const ReferenceEvaluator ref(g, pairs);
  const auto m = static_cast<std::uint32_t>(pairs.count());
  Union u;
  std::vector<std::uint32_t> next{0};
  while (!next.empty()) {
    std::uint32_t& c = next.back();
    if (u.size() < limit && c < m) {
      const std::uint32_t pick = c++;
      u.push_back(pick);
      next.push_back(pick + 1);
      const UnionValue v = ref.evaluate(u);
      ++best.candidates;
      if (v.generates) {
        ++best.generating;
        best.offer(v.norm, witness_of(pairs, u));
      }
    } else {
      if (!u.empty()) u.pop_back();
      next.pop_back();
    }
  }
}

}  // namespace

std::size_t class_pair_count(const Group& g) {
  return class_pairs(conjugacy_classes(g)).count();
}

DeltaEntry delta_n(const Group& g, std::size_t n, const DeltaOptions& opts) {
  if (n == 0) throw Error(ErrorCode::NoGeneratingSet, "Gamma_0 is empty");
  const ClassPairs pairs = class_pairs(conjugacy_classes(g));
  const std::size_t limit = std::min(n, pairs.count());
  Best best;
  if (opts.reference) {
    exhaustive_reference(g, pairs, limit, best);
  } else if (limit > 0) {
    const BitsetKernel kernel(g, pairs);
    const auto m = static_cast<std::int64_t>(pairs.count());
    std::vector<Best> partial(pairs.count());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(opts))
    for (std::int64_t first = 0; first < m; ++first)
      exhaustive_from(kernel, pairs, static_cast<std::uint32_t>(first), limit, partial[first]);
    for (const Best& b : partial) best.merge(b);
  }
  if (!best.found)
    throw Error(ErrorCode::NoGeneratingSet,
                "no set of size <= " + std::to_string(n) + " normally generates " + spec_label(g.spec()));
  return to_entry(g, best, n);
}

DeltaReport delta(const Group& g, const DeltaOptions& opts) {
  const ClassPairs pairs = class_pairs(conjugacy_classes(g));
  const auto kernel = make_kernel(g, pairs, opts);
  const auto m = static_cast<std::uint32_t>(pairs.count());

  Best best;
  std::vector<Union> candidates;
  for (std::uint32_t c = 0; c < m; ++c) candidates.push_back({c});
  while (!candidates.empty()) {
    const auto values = evaluate_all(candidates, g, pairs, kernel.get(), opts);
    std::vector<Union> non_generating;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      ++best.candidates;
      if (values[k].generates) {
        ++best.generating;
        best.offer(values[k].norm, witness_of(pairs, candidates[k]));
      } else {
        non_generating.push_back(std::move(candidates[k]));
      }
    }
    // Extend non-generating unions; keep only candidates all of whose
    // one-smaller subsets are non-generating (otherwise a proper subset
    // already generates and the candidate cannot raise the maximum).
    const std::set<Union> level(non_generating.begin(), non_generating.end());
    candidates.clear();
    for (const Union& u : non_generating) {
      for (std::uint32_t c = u.back() + 1; c < m; ++c) {
        Union cand = u;
        cand.push_back(c);
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && minimal; ++drop) {
          Union sub;
          for (std::size_t k = 0; k < cand.size(); ++k)
            if (k != drop) sub.push_back(cand[k]);
          minimal = level.count(sub) != 0;
        }
        if (minimal) candidates.push_back(std::move(cand));
      }
    }
  }
  if (!best.found)
    throw Error(ErrorCode::NoGeneratingSet, spec_label(g.spec()) + " has no normally generating set");

  DeltaReport report;
  report.spec = g.spec();
  report.delta = to_entry(g, best, 0);
  report.predicted = predicted_delta(g.spec());
  report.match = report.predicted && *report.predicted == static_cast<std::int64_t>(report.delta.value);
  return report;
}

}  // namespace conjdiam
