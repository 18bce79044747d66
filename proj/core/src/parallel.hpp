#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace nagata::detail {

/// Least index i in [0, count) with found(i) true. Indices are handed out in
/// increasing order and workers stop once they pass the best hit, so every
/// index below the answer is evaluated and the result does not depend on
/// the worker count.
template <class Pred>
std::optional<std::size_t> first_hit(std::size_t count, unsigned workers, Pred found) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || i > best.load(std::memory_order_relaxed)) return;
      if (found(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(count, 1024))));
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  const std::size_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based stream: draw j of sample s depends only on (seed, s, j).
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t sample)
      : state_(splitmix64(seed ^ splitmix64(sample))) {}
  std::size_t below(std::size_t bound) {
    state_ = splitmix64(state_);
    return static_cast<std::size_t>(state_ % bound);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact while it fits; saturates otherwise.
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// Position of a sorted combination of indices into [0, n) among all
/// k-combinations in lexicographic order.
inline std::uint64_t combination_rank(const std::vector<std::size_t>& combo, std::size_t n) {
  std::uint64_t rank = 0;
  std::size_t prev = 0;
  const std::size_t k = combo.size();
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t v = (t == 0 ? 0 : prev + 1); v < combo[t]; ++v)
      rank = saturating_add(rank, binomial(n - v - 1, k - t - 1));
    prev = combo[t];
  }
  return rank;
}

}  // namespace nagata::detail
