#pragma once

// Symmetric-group representation data needed by the Weingarten function:
// standard-tableau counts, irreducible characters on conjugacy classes, and
// the principal specialization s_λ(1^d).

#include <algorithm>
#include <utility>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/class_cache.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/partition.hpp"

namespace haarpt {

struct CharacterValue {
  BigInt value;
  bool operator==(const CharacterValue&) const = default;
};

// Content-free hook length of box (row, col), both zero-based.
inline int hook_length(const Partition& lam, int row, int col) {
  int arm = lam[static_cast<std::size_t>(row)] - col - 1;
  int leg = 0;
  for (int r = row + 1; r < lam.length() && lam[static_cast<std::size_t>(r)] > col; ++r) ++leg;
  return arm + leg + 1;
}

// f^λ = k! / prod(hooks).
inline BigInt syt_count(const Partition& lam) {
  BigInt hooks = 1;
  for (int r = 0; r < lam.length(); ++r)
    for (int c = 0; c < lam[static_cast<std::size_t>(r)]; ++c) hooks *= hook_length(lam, r, c);
  return exact_div(factorial(static_cast<unsigned long>(lam.weight())), hooks, "hook length formula");
}

namespace detail {

// Rim-hook removal on beta numbers β_i = λ_i + (n - 1 - i). Removing a hook
// of length h moves one bead from b to b - h (if that slot is free); the sign
// is (-1)^{number of beads strictly between}.
using MnKey = std::pair<std::vector<int>, std::vector<int>>;

inline MemoTable<MnKey, BigInt>& mn_memo() {
  static MemoTable<MnKey, BigInt> memo;
  return memo;
}

inline BigInt mn_character_parts(const std::vector<int>& lam, const std::vector<int>& mu) {
  if (mu.empty()) return lam.empty() ? 1 : 0;
  return mn_memo().get({lam, mu}, [&]() -> BigInt {
    int n = static_cast<int>(lam.size());
    int h = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    std::vector<int> beta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (n - 1 - i);
    BigInt total = 0;
    for (int i = 0; i < n; ++i) {
      int b = beta[static_cast<std::size_t>(i)];
      int target = b - h;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int between = 0;
      for (int x : beta) between += (x > target && x < b);
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(i)] = target;
      std::sort(moved.rbegin(), moved.rend());
      std::vector<int> next;
      for (int j = 0; j < n; ++j) {
        int part = moved[static_cast<std::size_t>(j)] - (n - 1 - j);
        if (part > 0) next.push_back(part);
      }
      BigInt sub = mn_character_parts(next, mu_rest);
      if (between % 2) total -= sub;
      else total += sub;
    }
    return total;
  });
}

}  // namespace detail

// χ^λ evaluated on the class μ (Murnaghan–Nakayama).
inline CharacterValue mn_character(const Partition& lam, const CycleType& mu) {
  require(lam.weight() == mu.weight(), "mn_character: weight mismatch");
  return {detail::mn_character_parts(lam.parts(), mu.parts())};
}

// s_λ(1^d) = (f^λ / k!) prod_{(i,j) ∈ λ} (d + j - i); zero when λ has more than d rows.
inline BigInt schur_dim(const Partition& lam, long d) {
  require(d >= 1, "schur_dim: d must be positive");
  BigInt contents = 1;
  for (int r = 0; r < lam.length(); ++r)
    for (int c = 0; c < lam[static_cast<std::size_t>(r)]; ++c) contents *= BigInt(d + c - r);
  return exact_div(syt_count(lam) * contents, factorial(static_cast<unsigned long>(lam.weight())),
                   "schur_dim product formula");
}

}  // namespace haarpt
