#pragma once

// Reductions over the subset lattice 2^[n], split into contiguous mask ranges
// evaluated by worker threads. Partial sums are combined in range order; the
// result does not depend on the schedule because the arithmetic is exact.

#include "fzgraph/bigint.hpp"
#include "fzgraph/error.hpp"
#include "fzgraph/multi_index.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace fzg {

/// Largest n for which a 2^n-term formula runs without allow_large.
inline constexpr unsigned kDefaultSizeGuard = 24;

struct EvalOptions {
  /// Lift the 2^n size guard.
  bool allow_large = false;
  /// Worker threads for lattice sums; 0 picks hardware_concurrency().
  unsigned threads = 0;
};

inline void require_lattice_size(unsigned n, const EvalOptions& opts, const char* what) {
  if (n > kDefaultSizeGuard && !opts.allow_large) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) +
                         " exceeds the size guard of " +
                         std::to_string(kDefaultSizeGuard) + " (2^n terms)");
  }
  if (n >= 63) {
    throw SizeLimitError(std::string(what) + ": n = " + std::to_string(n) +
                         " cannot be enumerated");
  }
}

/// sum of term(i) for i in [0, count), split over worker threads.
template <class Term>
BigInt parallel_sum(std::uint64_t count, Term&& term, const EvalOptions& opts = {}) {
  unsigned workers = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  constexpr std::uint64_t kMinPerWorker = 1024;
  workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(count / kMinPerWorker, 1, std::max(workers, 1U)));

  auto run_range = [&term](std::uint64_t lo, std::uint64_t hi) {
    BigInt acc = 0;
    for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  };
  if (workers == 1) return run_range(0, count);

  std::vector<BigInt> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(count, w * chunk);
      const std::uint64_t hi = std::min(count, lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        try {
          partial[w] = run_range(lo, hi);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  BigInt sum = 0;
  for (const auto& p : partial) sum += p;
  return sum;
}

/// sum over all masks I in [0, 2^n) of term(I).
template <class Term>
BigInt subset_sum(unsigned n, Term&& term, const EvalOptions& opts = {}) {
  if (n >= 63) throw SizeLimitError("subset_sum: lattice too large");
  return parallel_sum(
      std::uint64_t{1} << n, [&term](std::uint64_t m) { return term(static_cast<Mask>(m)); },
      opts);
}

/// C(n, k), or nullopt past 2^64.
inline std::optional<std::uint64_t> binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

/// All k-subsets of [n] in increasing mask order (Gosper's hack).
inline std::vector<Mask> k_subsets(unsigned n, unsigned k) {
  std::vector<Mask> out;
  if (k > n) return out;
  if (k == 0) return {0};
  if (auto c = binomial(n, k)) out.reserve(*c);
  const Mask limit = full_mask(n);
  Mask m = full_mask(k);
  while (true) {
    out.push_back(m);
    if (m == (limit & ~full_mask(n - k))) break;
    const Mask low = m & (~m + 1);
    const Mask ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
  return out;
}

/// Largest number of k-subsets enumerated without allow_large.
inline constexpr std::uint64_t kGradedTermGuard = std::uint64_t{1} << kDefaultSizeGuard;

/// sum over masks I with |I| = k of term(I).
template <class Term>
BigInt graded_subset_sum(unsigned n, unsigned k, Term&& term, const EvalOptions& opts = {}) {
  if (k > n) return 0;
  const auto count = binomial(n, k);
  if (!count || (*count > kGradedTermGuard && !opts.allow_large)) {
    throw SizeLimitError("graded sum over C(" + std::to_string(n) + "," +
                         std::to_string(k) + ") subsets exceeds the size guard");
  }
  const auto masks = k_subsets(n, k);
  return parallel_sum(
      masks.size(), [&](std::uint64_t i) { return term(masks[i]); }, opts);
}

}  // namespace fzg
