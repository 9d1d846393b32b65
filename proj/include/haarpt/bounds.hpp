#pragma once

// Explicit-constant upper bounds on the moments, the valid-triple linear
// program with its two closed-form dual solutions, and the derived norm,
// exponent and entropy quantities. The universal constants C and C' of the
// asymptotic statements are never instantiated; reports carry the
// constant-free scale next to every explicit value.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/moments_exact.hpp"
#include "haarpt/perm_core.hpp"

namespace haarpt {

struct LpBruteResult {
  BigInt value;
  LPTriple argmax;
};

// max d_A^a d_B^b r^c over valid triples with a, b, c ∈ {1..k}. Candidates are
// screened in log space and the survivors compared exactly.
inline LpBruteResult lp_brute(const SubspaceSpec& spec, int k) {
  require(k >= 1, "lp_brute: k must be positive");
  double la = std::log(static_cast<double>(spec.d_a()));
  double lb = std::log(static_cast<double>(spec.d_b()));
  double lr = std::log(static_cast<double>(spec.r()));
  double best = -1;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (int c = 1; c <= k; ++c)
        if (LPTriple{a, b, c}.valid(k)) best = std::max(best, a * la + b * lb + c * lr);
  double slack = 1e-9 * std::max(1.0, best);
  LpBruteResult out{0, {}};
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (int c = 1; c <= k; ++c) {
        LPTriple t{a, b, c};
        if (!t.valid(k) || a * la + b * lb + c * lr < best - slack) continue;
        BigInt v = ipow(BigInt(spec.d_a()), static_cast<unsigned long>(a)) *
                   ipow(BigInt(spec.d_b()), static_cast<unsigned long>(b)) *
                   ipow(BigInt(spec.r()), static_cast<unsigned long>(c));
        if (v > out.value) out = {v, t};
      }
  return out;
}

struct LpDualResult {
  Branch branch{};
  BigInt value;     // integer ceiling of the dual objective, exponentiated
  BigInt squared;   // first branch: d_A^{k+2} d_B^{k+2} r^k (value = ceil(sqrt)); second: value²
  bool exact = true;
};

// Large-rank branch: (d_A d_B)^{(k+2)/2} r^{k/2}; otherwise d_A d_B^{k+1}.
inline LpDualResult lp_dual_bound(const SubspaceSpec& spec, int k) {
  require(k >= 1, "lp_dual_bound: k must be positive");
  auto uk = static_cast<unsigned long>(k);
  LpDualResult out;
  out.branch = spec.branch();
  if (out.branch == Branch::kRankAboveRatio) {
    out.squared = ipow(BigInt(spec.d()), uk + 2) * ipow(BigInt(spec.r()), uk);
    out.exact = is_perfect_square(out.squared);
    out.value = ceil_sqrt(out.squared);
  } else {
    out.value = BigInt(spec.d_a()) * ipow(BigInt(spec.d_b()), uk + 1);
    out.squared = out.value * out.value;
  }
  return out;
}

// Hypothesis of the explicit bound: k <= (r/2)^{2/3}, i.e. 4k³ <= r².
inline bool alpha_bound_hypothesis(const SubspaceSpec& spec, int k) {
  return BigInt(4) * k * k * k <= BigInt(spec.r()) * spec.r();
}

// (3 C_{k-1} k² 4^{k-1} / d^k) Σ_{valid (a,b,c)} min(k!, L(k, k+2-max{a+b,a+c,b+c})) d_A^a d_B^b r^c
// where L is lemma2_count_bound. An upper bound on exact_moment under the
// hypothesis; with enforce_hypothesis = false the expression is evaluated
// regardless (it is then not certified).
inline Rational explicit_moment_bound(const SubspaceSpec& spec, int k, bool enforce_hypothesis = true) {
  require(k >= 1, "explicit_moment_bound: k must be positive");
  if (enforce_hypothesis) {
    require(alpha_bound_hypothesis(spec, k), "explicit_moment_bound: requires k <= (r/2)^{2/3}");
    require(spec.d() >= k, "explicit_moment_bound: requires d >= k");
  }
  auto uk = static_cast<unsigned long>(k);
  std::vector<BigInt> pa(uk + 1), pb(uk + 1), pr(uk + 1);
  for (unsigned long i = 0; i <= uk; ++i) {
    pa[i] = ipow(BigInt(spec.d_a()), i);
    pb[i] = ipow(BigInt(spec.d_b()), i);
    pr[i] = ipow(BigInt(spec.r()), i);
  }
  BigInt kf = factorial(uk);
  std::vector<BigInt> count_cap(static_cast<std::size_t>(k) + 2);
  for (int delta = 0; delta <= k + 1; ++delta) {
    BigInt l2 = lemma2_count_bound(k, delta);
    count_cap[static_cast<std::size_t>(delta)] = l2 < kf ? l2 : kf;
  }
  BigInt sum = 0;
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      for (int c = 1; c <= k; ++c) {
        if (!LPTriple{a, b, c}.valid(k)) continue;
        int delta = k + 2 - std::max({a + b, a + c, b + c});
        sum += count_cap[static_cast<std::size_t>(delta)] * pa[static_cast<std::size_t>(a)] *
               pb[static_cast<std::size_t>(b)] * pr[static_cast<std::size_t>(c)];
      }
  BigInt prefactor = BigInt(3) * catalan(uk - 1) * BigInt(k) * BigInt(k) * ipow(4, uk - 1);
  return make_rational(prefactor * sum, ipow(BigInt(spec.d()), uk));
}

struct ExponentReport {
  Branch branch{};
  double epsilon = 0;    // ε = 9/log2(d_A d_B / r), or ε' = 9/log2 d_A
  double exponent = 0;   // 1/2 - ε, or 1 - ε'
  double threshold = 0;  // (r/(d_A d_B))^{exponent}, or (1/d_A)^{exponent}
  bool vacuous = false;  // exponent <= 0: no multiplicativity statement
};

inline ExponentReport weak_mult_exponent(const SubspaceSpec& spec) {
  ExponentReport out;
  out.branch = spec.branch();
  if (out.branch == Branch::kRankAboveRatio) {
    if (spec.d() <= spec.r()) throw UsageError("weak_mult_exponent: requires d_A d_B > r (ε undefined)");
    double ratio_log = std::log2(static_cast<double>(spec.d()) / static_cast<double>(spec.r()));
    out.epsilon = 9.0 / ratio_log;
    out.exponent = 0.5 - out.epsilon;
    out.threshold = std::pow(static_cast<double>(spec.r()) / static_cast<double>(spec.d()), out.exponent);
  } else {
    if (spec.d_a() <= 1) throw UsageError("weak_mult_exponent: requires d_A > 1 (ε' undefined)");
    out.epsilon = 9.0 / std::log2(static_cast<double>(spec.d_a()));
    out.exponent = 1.0 - out.epsilon;
    out.threshold = std::pow(1.0 / static_cast<double>(spec.d_a()), out.exponent);
  }
  out.vacuous = out.exponent <= 0;
  return out;
}

// α(1 - 1/p) for α ∈ (0,1] and p > 1; p = nullopt means p = ∞.
inline Rational holder_exponent(const Rational& alpha, const std::optional<Rational>& p) {
  require(alpha > 0 && alpha <= 1, "holder_exponent: requires 0 < α <= 1");
  if (!p) return alpha;
  require(*p > 1, "holder_exponent: requires p > 1");
  return Rational(alpha * (1 - 1 / *p));
}

struct EntropyFloor {
  Branch branch{};
  double leading = 0;   // ½(log2 d_A + log2 d_B - log2 r), or log2 d_A
  double constant = 8;  // C instantiated from the 2^8 tail scale
  double floor = 0;     // leading - constant
  bool vacuous = false; // floor <= 0
};

inline EntropyFloor entropy_floor(const SubspaceSpec& spec) {
  EntropyFloor out;
  out.branch = spec.branch();
  out.leading = out.branch == Branch::kRankAboveRatio
                    ? 0.5 * std::log2(static_cast<double>(spec.d()) / static_cast<double>(spec.r()))
                    : std::log2(static_cast<double>(spec.d_a()));
  out.floor = out.leading - out.constant;
  out.vacuous = out.floor <= 0;
  return out;
}

// Largest even k with k < (m/2)^{2/3} (i.e. 4k³ < m²); nullopt if even 2 fails.
inline std::optional<int> select_moment_order(long m) {
  std::optional<int> best;
  for (int k = 2; BigInt(4) * k * k * k < BigInt(m) * m; k += 2) best = k;
  return best;
}

struct BoundReport {
  explicit BoundReport(const SubspaceSpec& s) : spec(s) {}

  SubspaceSpec spec;
  int k = 0;
  bool k_from_rule = true;  // false when the even-k selection rule had no solution and k = 2 was used
  Branch branch{};
  double scale = 0;            // 2^8 r^{1/2}/(d_A d_B)^{1/2}, or 2^8/d_A
  Rational scale_squared;      // exact square of the scale
  double norm_scale = 0;       // the same scale without the 2^8 (constant-free E‖M^Γ‖ order)
  std::optional<Rational> exact_moment;
  std::optional<Rational> explicit_bound;
  std::optional<double> moment_root;  // E‖M^Γ‖∞ <= (E tr (M^Γ)^k)^{1/k}
  std::string moment_root_source;     // "exact", "explicit", or "none"
  LpBruteResult lp_brute;
  LpDualResult lp_dual;
  double tail_exponent = 0;    // (m/2)^{2/3}
  double tail_prefactor = 0;   // m^{16/3}; the constant C' is unspecified
  std::optional<ExponentReport> exponents;  // absent when ε is undefined
  std::string exponent_error;
  EntropyFloor entropy;

  // δ ↦ m^{16/3} δ^{-(m/2)^{2/3}}, without the unspecified constant C'.
  double tail_shape(double delta) const { return tail_prefactor * std::pow(delta, -tail_exponent); }
};

inline BoundReport bound_report(const SubspaceSpec& spec, int k) {
  require(k >= 1, "bound_report: k must be positive");
  BoundReport rep(spec);
  rep.k = k;
  rep.branch = spec.branch();
  double m = static_cast<double>(spec.m());
  if (rep.branch == Branch::kRankAboveRatio) {
    rep.scale_squared = make_rational(BigInt(65536) * spec.r(), BigInt(spec.d()));
    rep.norm_scale = std::sqrt(static_cast<double>(spec.r()) / static_cast<double>(spec.d()));
  } else {
    rep.scale_squared = make_rational(BigInt(65536), BigInt(spec.d_a()) * spec.d_a());
    rep.norm_scale = 1.0 / static_cast<double>(spec.d_a());
  }
  rep.scale = 256.0 * rep.norm_scale;
  if (k <= 10) rep.exact_moment = exact_moment(spec, k);
  if (alpha_bound_hypothesis(spec, k) && spec.d() >= k) rep.explicit_bound = explicit_moment_bound(spec, k);
  if (k % 2 == 0 && rep.exact_moment) {
    rep.moment_root = std::pow(to_double(*rep.exact_moment), 1.0 / k);
    rep.moment_root_source = "exact";
  } else if (k % 2 == 0 && rep.explicit_bound) {
    // log-domain root: the bound can exceed double range
    double log_bound = std::log(rep.explicit_bound->get_num().get_d()) - std::log(rep.explicit_bound->get_den().get_d());
    if (!std::isfinite(log_bound)) {
      long exp_num = 0, exp_den = 0;
      double mant_num = mpz_get_d_2exp(&exp_num, rep.explicit_bound->get_num_mpz_t());
      double mant_den = mpz_get_d_2exp(&exp_den, rep.explicit_bound->get_den_mpz_t());
      log_bound = std::log(mant_num) - std::log(mant_den) + static_cast<double>(exp_num - exp_den) * std::log(2.0);
    }
    rep.moment_root = std::exp(log_bound / k);
    rep.moment_root_source = "explicit";
  } else {
    rep.moment_root_source = "none";
  }
  rep.lp_brute = lp_brute(spec, k);
  rep.lp_dual = lp_dual_bound(spec, k);
  rep.tail_exponent = std::cbrt(m / 2.0) * std::cbrt(m / 2.0);
  rep.tail_prefactor = std::pow(m, 16.0 / 3.0);
  try {
    rep.exponents = weak_mult_exponent(spec);
  } catch (const UsageError& e) {
    rep.exponent_error = e.what();
  }
  rep.entropy = entropy_floor(spec);
  return rep;
}

// Report at the moment order used for the norm bound: the largest even k
// below (m/2)^{2/3}, falling back to k = 2 (flagged) for small m.
inline BoundReport thm_main_bounds(const SubspaceSpec& spec) {
  require(spec.m() >= 4, "thm_main_bounds: requires m = min{r, d_A, d_B} >= 4");
  auto k = select_moment_order(spec.m());
  BoundReport rep = bound_report(spec, k.value_or(2));
  rep.k_from_rule = k.has_value();
  return rep;
}

}  // namespace haarpt
