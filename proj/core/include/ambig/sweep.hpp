#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "ambig/frames.hpp"
#include "ambig/random.hpp"

namespace ambig {

// Controls how pairwise axiom checks visit 2^Θ × 2^Θ.
struct SweepOptions {
  // Frames up to this many atoms are always swept exhaustively (4^m pairs).
  static constexpr std::size_t kExhaustiveAtoms = 8;

  bool force_exhaustive = false;
  // Random pairs drawn above the exhaustive threshold, in addition to the
  // structured pairs (A,¬A), (A,∅), (A,Θ), (A,A) for every A.
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;

  bool exhaustive_for(const Frame& frame) const {
    return force_exhaustive || frame.size() <= kExhaustiveAtoms;
  }
};

// Worker threads used by exhaustive sweeps and the fuzz driver. Zero restores
// the default: AMBIG_THREADS if set, else the hardware concurrency.
unsigned worker_count();
void set_worker_count(unsigned n);

struct PairSweep {
  // Smallest failing (A, B) in (A.bits, B.bits) lexicographic order.
  std::optional<std::pair<PropSet, PropSet>> failure;
  std::uint64_t cases = 0;
  bool exhaustive = true;
};

struct SubsetSweep {
  std::optional<PropSet> failure;
  std::uint64_t cases = 0;
};

template <class Pred>
SubsetSweep sweep_subsets(const Frame& frame, Pred&& holds) {
  SubsetSweep out;
  const std::uint32_t count = static_cast<std::uint32_t>(frame.subset_count());
  for (std::uint32_t a = 0; a < count; ++a) {
    ++out.cases;
    if (!holds(PropSet(a))) {
      out.failure = PropSet(a);
      break;
    }
  }
  return out;
}

namespace detail {

template <class Pred>
std::optional<std::pair<PropSet, PropSet>> first_failure_in_rows(
    std::uint32_t row_begin, std::uint32_t row_end, std::uint32_t count,
    const std::atomic<std::uint64_t>& best_row, Pred& holds) {
  for (std::uint32_t a = row_begin; a < row_end; ++a) {
    if (a > best_row.load(std::memory_order_relaxed)) return std::nullopt;
    for (std::uint32_t b = 0; b < count; ++b) {
      if (!holds(PropSet(a), PropSet(b))) return std::pair{PropSet(a), PropSet(b)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Evaluates holds(A, B) over pairs of propositions. Exhaustive sweeps report
// the lexicographically smallest failure regardless of the worker count.
template <class Pred>
PairSweep sweep_pairs(const Frame& frame, const SweepOptions& opts, Pred&& holds) {
  PairSweep out;
  const std::uint32_t count = static_cast<std::uint32_t>(frame.subset_count());

  if (opts.exhaustive_for(frame)) {
    out.exhaustive = true;
    const std::uint64_t total = std::uint64_t{count} * count;
    unsigned workers = std::min<unsigned>(worker_count(), count);
    std::atomic<std::uint64_t> best_row{~std::uint64_t{0}};
    if (workers <= 1 || total < (std::uint64_t{1} << 16)) {
      out.failure = detail::first_failure_in_rows(0, count, count, best_row, holds);
    } else {
      std::vector<std::optional<std::pair<PropSet, PropSet>>> found(workers);
      std::vector<std::jthread> pool;
      const std::uint32_t rows = (count + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        std::uint32_t begin = std::min(count, w * rows);
        std::uint32_t end = std::min(count, begin + rows);
        pool.emplace_back([&, w, begin, end] {
          found[w] = detail::first_failure_in_rows(begin, end, count, best_row, holds);
          if (found[w]) {
            std::uint64_t row = found[w]->first.bits;
            std::uint64_t cur = best_row.load();
            while (row < cur && !best_row.compare_exchange_weak(cur, row)) {
            }
          }
        });
      }
      pool.clear();
      for (auto& f : found) {
        if (f) {
          out.failure = f;
          break;
        }
      }
    }
    if (out.failure) {
      out.cases = std::uint64_t{out.failure->first.bits} * count + out.failure->second.bits + 1;
    } else {
      out.cases = total;
    }
    return out;
  }

  out.exhaustive = false;
  auto consider = [&](PropSet a, PropSet b) {
    ++out.cases;
    if (holds(a, b)) return;
    if (!out.failure || std::pair{a, b} < *out.failure) out.failure = std::pair{a, b};
  };
  const PropSet full = frame.full();
  for (std::uint32_t a = 0; a < count; ++a) {
    PropSet pa(a);
    consider(pa, frame.complement(pa));
    consider(pa, PropSet{});
    consider(pa, full);
    consider(pa, pa);
  }
  Stream rng = Stream(opts.seed).split(frame.size());
  for (std::uint64_t k = 0; k < opts.samples; ++k) {
    std::uint64_t r = rng.next();
    consider(PropSet(static_cast<std::uint32_t>(r) & full.bits),
             PropSet(static_cast<std::uint32_t>(r >> 32) & full.bits));
  }
  return out;
}

}  // namespace ambig
