#pragma once

// Test-only brute-force references. Nothing here calls into the library's
// enumeration or rank code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<unsigned>;

// All partitions of `total` into at most `max_parts` parts, each part <= cap,
// by plain recursion (parts non-increasing).
inline void partitions(unsigned total, unsigned max_parts, unsigned cap, Parts& prefix,
                       const std::function<void(const Parts&)>& visit) {
  if (total == 0) {
    visit(prefix);
    return;
  }
  if (max_parts == 0) return;
  for (unsigned p = std::min(total, cap); p >= 1; --p) {
    prefix.push_back(p);
    partitions(total - p, max_parts - 1, p, prefix, visit);
    prefix.pop_back();
  }
}

inline std::vector<Parts> all_partitions(unsigned total, unsigned max_parts) {
  std::vector<Parts> out;
  Parts prefix;
  partitions(total, max_parts, total, prefix, [&](const Parts& p) { out.push_back(p); });
  return out;
}

// p(d, n): partitions of d into at most n parts, via p(d,n) = p(d-n,n) + p(d,n-1).
inline std::uint64_t partition_count(unsigned d, unsigned n) {
  static std::map<std::pair<unsigned, unsigned>, std::uint64_t> memo;
  if (d == 0) return 1;
  if (n == 0) return 0;
  if (auto it = memo.find({d, n}); it != memo.end()) return it->second;
  const std::uint64_t v = (d >= n ? partition_count(d - n, n) : 0) + partition_count(d, n - 1);
  memo[{d, n}] = v;
  return v;
}

// Product of (a_i + 1) over all but the smallest exponent.
inline std::uint64_t monomial_rank(Parts p) {
  std::sort(p.begin(), p.end());
  std::uint64_t r = 1;
  for (std::size_t i = 1; i < p.size(); ++i) r *= p[i] + 1;
  return r;
}

inline std::uint64_t max_monomial_rank(unsigned n, unsigned d) {
  std::uint64_t best = 0;
  for (const auto& p : all_partitions(d, n)) best = std::max(best, monomial_rank(p));
  return best;
}

// Best total rank of a coprime sum using at most n variables: unbounded
// knapsack over block shapes keyed by variable count.
inline std::uint64_t max_coprime_rank(unsigned n, unsigned d) {
  std::vector<std::uint64_t> best_block(n + 1, 0);
  for (const auto& p : all_partitions(d, n)) {
    best_block[p.size()] = std::max(best_block[p.size()], monomial_rank(p));
  }
  std::vector<std::uint64_t> best(n + 1, 0);
  for (unsigned k = 1; k <= n; ++k) {
    best[k] = best[k - 1];
    for (unsigned len = 1; len <= k; ++len) {
      if (best_block[len] != 0) best[k] = std::max(best[k], best[k - len] + best_block[len]);
    }
  }
  return best[n];
}

// Alexander-Hirschowitz generic rank with 64-bit arithmetic (small n, d only).
inline std::uint64_t generic_rank(unsigned n, unsigned d) {
  if (d == 2) return n;
  if (n == 3 && d == 4) return 6;
  if (n == 4 && d == 4) return 10;
  if (n == 5 && d == 3) return 8;
  if (n == 5 && d == 4) return 15;
  // C(d+n-1, n-1) by the multiplicative formula.
  unsigned __int128 c = 1;
  for (unsigned i = 1; i <= n - 1; ++i) c = c * (d + i) / i;
  return static_cast<std::uint64_t>((c + n - 1) / n);
}

}  // namespace oracle
