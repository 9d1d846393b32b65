#pragma once

// Exact unitary Weingarten function and its cross-checks: the character
// formula (primary), the closed form on long cycles, the primitive
// factorization series, and the inverse of the permutation Gram matrix.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/class_cache.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/partition.hpp"
#include "haarpt/perm_core.hpp"
#include "haarpt/sym_rep.hpp"

namespace haarpt {

struct WeingartenValue {
  Rational value;
  bool operator==(const WeingartenValue&) const = default;
};

// Wg(μ, d) = (1/k!²) Σ_λ (f^λ)² χ^λ(μ) / s_λ(1^d). Requires d >= k, where the
// permutation operators on (C^d)^{⊗k} are linearly independent.
inline WeingartenValue wg_exact(const CycleType& mu, long d) {
  int k = mu.weight();
  require(k >= 1, "wg_exact: empty cycle type");
  require(d >= k, "wg_exact: requires d >= k");
  static MemoTable<std::pair<CycleType, long>, Rational> memo;
  return {memo.get({mu, d}, [&] {
    Rational sum = 0;
    for (const auto& lam : partitions_of(k)) {
      BigInt f = syt_count(lam);
      sum += make_rational(BigInt(f * f * mn_character(lam, mu).value), schur_dim(lam, d));
    }
    BigInt kf = factorial(static_cast<unsigned long>(k));
    return Rational(sum / Rational(BigInt(kf * kf)));
  })};
}

inline WeingartenValue wg_exact(const Permutation& p, long d) { return wg_exact(cycle_type(p), d); }

// (-1)^{k+1} C_{k-1} / (d (d²-1²) ... (d²-(k-1)²)).
inline WeingartenValue wg_cycle_formula(int k, long d) {
  require(k >= 1, "wg_cycle_formula: k must be positive");
  require(d >= k, "wg_cycle_formula: requires d >= k");
  BigInt denom = d;
  for (long i = 1; i < k; ++i) denom *= BigInt(d * d - i * i);
  Rational value = make_rational(catalan(static_cast<unsigned long>(k - 1)), denom);
  if (k % 2 == 0) value = -value;
  return {value};
}

// A_{πσ} = d^{c(π^{-1}σ) - k}, rows and columns in lexicographic order of S_k.
struct GramMatrix {
  int k = 0;
  long d = 0;
  std::vector<Permutation> perms;
  std::vector<Rational> entries;

  std::size_t size() const { return perms.size(); }
  const Rational& at(std::size_t row, std::size_t col) const { return entries[row * size() + col]; }
};

inline GramMatrix gram_matrix(int k, long d) {
  require(k >= 1 && d >= 1, "gram_matrix: k and d must be positive");
  require_feasible(k <= 6, "gram_matrix: k > 6 exceeds k!×k! storage cap");
  GramMatrix g{k, d, {}, {}};
  for (const auto& p : enumerate_sk(k)) g.perms.push_back(p);
  std::vector<Rational> powers(static_cast<std::size_t>(k) + 1);
  for (int c = 1; c <= k; ++c) powers[static_cast<std::size_t>(c)] = rpow(Rational(d), c - k);
  g.entries.reserve(g.size() * g.size());
  for (const auto& p : g.perms) {
    Permutation p_inv = inverse(p);
    for (const auto& s : g.perms) g.entries.push_back(powers[static_cast<std::size_t>(cycle_count(compose(p_inv, s)))]);
  }
  return g;
}

struct GramInverseReport {
  int k = 0;
  long d = 0;
  bool identity = false;
  struct Failure {
    std::size_t row, col;
    Rational value;
  };
  std::optional<Failure> first_failure;
};

// Multiplies A by B_{πσ} = d^k Wg(π^{-1}σ) exactly and compares with I.
inline GramInverseReport verify_gram_inverse(int k, long d) {
  require(d >= k, "verify_gram_inverse: requires d >= k");
  require_feasible(k <= 5, "verify_gram_inverse: k > 5 not supported");
  GramMatrix a = gram_matrix(k, d);
  std::size_t n = a.size();
  auto classes = cycle_types_of(k);
  std::map<CycleType, std::size_t> class_index;
  for (std::size_t i = 0; i < classes.size(); ++i) class_index[classes[i]] = i;

  // cls[i*n+j] = class of perms[i]^{-1} perms[j]; both A and B depend only on it.
  std::vector<std::size_t> cls(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Permutation inv = inverse(a.perms[i]);
    for (std::size_t j = 0; j < n; ++j) cls[i * n + j] = class_index.at(cycle_type(compose(inv, a.perms[j])));
  }
  std::vector<Rational> a_val(classes.size()), b_val(classes.size());
  Rational dk = rpow(Rational(d), k);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    a_val[c] = rpow(Rational(d), classes[c].length() - k);
    b_val[c] = dk * wg_exact(classes[c], d).value;
  }

  GramInverseReport report{k, d, true, std::nullopt};
  std::size_t nc = classes.size();
  std::vector<long> pair_count(nc * nc);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) {
      std::fill(pair_count.begin(), pair_count.end(), 0);
      for (std::size_t t = 0; t < n; ++t) ++pair_count[cls[row * n + t] * nc + cls[t * n + col]];
      Rational entry = 0;
      for (std::size_t x = 0; x < nc; ++x)
        for (std::size_t y = 0; y < nc; ++y)
          if (long m = pair_count[x * nc + y]) entry += Rational(m) * a_val[x] * b_val[y];
      Rational expected = (row == col) ? 1 : 0;
      if (entry != expected) {
        report.identity = false;
        report.first_failure = GramInverseReport::Failure{row, col, entry};
        return report;
      }
    }
  }
  return report;
}

// (1/d^k) Σ_{ℓ <= max_len} w_ℓ(μ) (-1/d)^ℓ.
inline Rational wg_series_truncated(const CycleType& mu, long d, int max_len) {
  int k = mu.weight();
  require(max_len >= 0, "wg_series_truncated: max_len must be non-negative");
  require_feasible(k <= 6 && max_len <= 8, "wg_series_truncated: requires k <= 6 and max_len <= 8");
  require(d >= k, "wg_series_truncated: requires d >= k");
  Permutation rep = Permutation::representative(mu);
  Rational sum = 0;
  for (int len = 0; len <= max_len; ++len) {
    BigInt w = primitive_factorization_count(rep, len);
    if (w == 0) continue;
    sum += Rational(w) * rpow(Rational(-1, d), len);
  }
  return sum * rpow(Rational(d), -k);
}

struct WgBoundReport {
  int k = 0;
  long d = 0;
  bool holds = true;
  Rational max_ratio = 0;
  std::vector<std::pair<CycleType, Rational>> ratios;  // |Wg| / bound per class
};

// |Wg(π)| <= (3 C_{k-1} / 2) d^{c(π) - 2k}, valid when k <= d^{2/3}.
inline WgBoundReport wg_bound_check(int k, long d) {
  require(k >= 1, "wg_bound_check: k must be positive");
  require_feasible(k <= 6, "wg_bound_check: k > 6 not supported");
  require(BigInt(k) * k * k <= BigInt(d) * d, "wg_bound_check: requires k <= d^{2/3}");
  WgBoundReport report{k, d, true, 0, {}};
  Rational prefactor = make_rational(BigInt(3 * catalan(static_cast<unsigned long>(k - 1))), 2);
  for (const auto& mu : cycle_types_of(k)) {
    Rational bound = prefactor * rpow(Rational(d), mu.length() - 2 * k);
    Rational ratio = Rational(abs(wg_exact(mu, d).value) / bound);
    if (ratio > 1) report.holds = false;
    if (ratio > report.max_ratio) report.max_ratio = ratio;
    report.ratios.emplace_back(mu, ratio);
  }
  return report;
}

}  // namespace haarpt
