#pragma once

// Brute-force verification suites over small k: defect counts, the Adrianov
// recurrence, the Gram inverse, character orthogonality, the S_2 series, and
// the trace identities built from explicit permutation operators.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/operators.hpp"
#include "haarpt/perm_core.hpp"
#include "haarpt/rng.hpp"
#include "haarpt/sym_rep.hpp"
#include "haarpt/weingarten.hpp"

namespace haarpt {

struct SuiteReport {
  explicit SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;
  nlohmann::json details = nlohmann::json::object();

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      counterexample = what;
    }
  }
};

inline void require_suite_kmax(int kmax) {
  require(kmax >= 1, "verify: kmax must be positive");
  require_feasible(kmax <= 7, "verify: kmax > 7 not supported");
}

// c(π⁻¹σ) + c(σ) <= k + c(π); counts at defect δ within the count bound and
// zero for odd δ. Details: max over π of count / bound per (k, δ).
inline SuiteReport verify_lemma2(int kmax) {
  require_suite_kmax(kmax);
  SuiteReport rep("lemma2");
  nlohmann::json ratios = nlohmann::json::array();
  for (int k = 1; k <= kmax; ++k) {
    std::map<int, double> worst;
    for (const auto& mu : cycle_types_of(k)) {
      std::vector<std::uint64_t> hist;
      try {
        hist = defect_histogram(Permutation::representative(mu));
      } catch (const InternalCheckError& e) {
        rep.check(false, "k=" + std::to_string(k) + " class " + mu.to_string() + ": " + e.what());
        continue;
      }
      rep.check(true, "");
      for (std::size_t delta = 0; delta < hist.size(); ++delta) {
        std::string where = "k=" + std::to_string(k) + " class " + mu.to_string() + " delta=" + std::to_string(delta);
        if (delta % 2) {
          rep.check(hist[delta] == 0, where + ": nonzero count at odd delta");
          continue;
        }
        BigInt bound = lemma2_count_bound(k, static_cast<int>(delta));
        BigInt count(static_cast<unsigned long>(hist[delta]));
        rep.check(count <= bound, where + ": count " + to_string(count) + " exceeds " + to_string(bound));
        double ratio = to_double(make_rational(count, bound));
        auto& w = worst[static_cast<int>(delta)];
        w = std::max(w, ratio);
      }
    }
    for (const auto& [delta, ratio] : worst) ratios.push_back({{"k", k}, {"delta", delta}, {"max_ratio", ratio}});
  }
  rep.details["max_count_over_bound"] = ratios;
  return rep;
}

inline SuiteReport verify_adrianov(int kmax) {
  require_suite_kmax(kmax);
  SuiteReport rep("adrianov");
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= kmax; ++k) {
    rep.check(adrianov_B(0, k) == catalan(static_cast<unsigned long>(k)), "B_0(" + std::to_string(k) + ") != C_k");
    auto kappa = Permutation::long_cycle(k);
    for (int g = 0; 2 * g <= k - 1; ++g) {
      BigInt recurrence = adrianov_B(g, k);
      BigInt brute(static_cast<unsigned long>(count_defect(kappa, g).count));
      rep.check(recurrence == brute, "k=" + std::to_string(k) + " g=" + std::to_string(g) + ": recurrence " +
                                         to_string(recurrence) + " vs count " + to_string(brute));
      rows.push_back({{"k", k}, {"g", g}, {"B", to_string(recurrence)}, {"count", to_string(brute)}});
    }
  }
  rep.details["values"] = rows;
  return rep;
}

inline SuiteReport verify_gram(int kmax) {
  require_suite_kmax(kmax);
  SuiteReport rep("gram");
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= std::min(kmax, 5); ++k)
    for (long d = k; d <= k + 2; ++d) {
      auto g = verify_gram_inverse(k, d);
      std::string where = "k=" + std::to_string(k) + " d=" + std::to_string(d);
      if (g.first_failure) {
        where += " entry (" + std::to_string(g.first_failure->row) + "," + std::to_string(g.first_failure->col) +
                 ") = " + to_string(g.first_failure->value);
      }
      rep.check(g.identity, where);
      rows.push_back({{"k", k}, {"d", d}, {"identity", g.identity}});
    }
  rep.details["cases"] = rows;
  return rep;
}

// Σ_μ |C_μ| χ^λ(μ) χ^ν(μ) = k! δ_{λν}, Σ (f^λ)² = k!, and χ^λ(e) = f^λ.
inline SuiteReport verify_characters(int kmax) {
  require_suite_kmax(kmax);
  SuiteReport rep("characters");
  for (int k = 1; k <= kmax; ++k) {
    auto lams = partitions_of(k);
    auto classes = cycle_types_of(k);
    BigInt kf = factorial(static_cast<unsigned long>(k));
    BigInt dims = 0;
    for (const auto& lam : lams) {
      dims += syt_count(lam) * syt_count(lam);
      rep.check(mn_character(lam, classes.back()).value == syt_count(lam), "chi(e) != f for " + lam.to_string());
    }
    rep.check(dims == kf, "sum of f^2 != k! at k=" + std::to_string(k));
    for (const auto& a : lams)
      for (const auto& b : lams) {
        BigInt total = 0;
        for (const auto& mu : classes) total += class_size(mu) * mn_character(a, mu).value * mn_character(b, mu).value;
        rep.check(total == (a == b ? kf : BigInt(0)), "orthogonality fails for " + a.to_string() + ", " + b.to_string());
      }
  }
  return rep;
}

// S_2: Wg(μ) - (partial sum to ℓ) equals the geometric tail exactly, and the
// k-cycle closed form agrees with the character formula.
inline SuiteReport verify_series(int kmax) {
  require_suite_kmax(kmax);
  SuiteReport rep("series");
  for (long d = 2; d <= 6; ++d)
    for (const auto& mu : cycle_types_of(2)) {
      Rational exact = wg_exact(mu, d).value;
      for (int len = 0; len <= 7; ++len) {
        int next = len + 1;
        if ((next - (2 - mu.length())) % 2) ++next;
        Rational first_omitted = rpow(Rational(d), -2) * rpow(Rational(-1, d), next);
        Rational tail = first_omitted * make_rational(BigInt(d * d), BigInt(d * d - 1));
        rep.check(exact - wg_series_truncated(mu, d, len) == tail,
                  "S_2 tail mismatch at " + mu.to_string() + " d=" + std::to_string(d) + " len=" + std::to_string(len));
      }
    }
  for (int k = 1; k <= std::min(kmax, 6); ++k)
    for (long d = k; d <= k + 3; ++d)
      rep.check(wg_exact(CycleType{k}, d).value == wg_cycle_formula(k, d).value,
                "cycle formula mismatch k=" + std::to_string(k) + " d=" + std::to_string(d));
  return rep;
}

// --- explicit permutation operators -------------------------------------

// D(π) on (C^n)^{⊗k} as a basis map: D(π)|i_1..i_k⟩ = |j⟩ with j_{π(m)} = i_m.
// Basis index is Σ_m i_m n^{k-1-m}.
inline std::vector<std::size_t> permutation_operator(const Permutation& p, long n) {
  int k = p.degree();
  std::size_t dim = 1;
  for (int m = 0; m < k; ++m) dim *= static_cast<std::size_t>(n);
  std::vector<std::size_t> image(dim);
  std::vector<long> digits(static_cast<std::size_t>(k)), moved(static_cast<std::size_t>(k));
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t rest = x;
    for (int m = k - 1; m >= 0; --m) {
      digits[static_cast<std::size_t>(m)] = static_cast<long>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    for (int m = 0; m < k; ++m) moved[static_cast<std::size_t>(p(m))] = digits[static_cast<std::size_t>(m)];
    std::size_t y = 0;
    for (int m = 0; m < k; ++m) y = y * static_cast<std::size_t>(n) + static_cast<std::size_t>(moved[static_cast<std::size_t>(m)]);
    image[x] = y;
  }
  return image;
}

inline SuiteReport verify_trace_identity(int kmax, std::uint64_t seed) {
  require_suite_kmax(kmax);
  SuiteReport rep("trace");
  int kcap = std::min(kmax, 3);
  nlohmann::json samples = nlohmann::json::array();

  // D(π)D(σ) = D(πσ): the operator representation matches compose()
  for (int k = 1; k <= kcap; ++k)
    for (const auto& p : enumerate_sk(k))
      for (const auto& s : enumerate_sk(k)) {
        auto dp = permutation_operator(p, 2), ds = permutation_operator(s, 2), dps = permutation_operator(compose(p, s), 2);
        bool same = true;
        for (std::size_t x = 0; x < dp.size(); ++x) same = same && dp[ds[x]] == dps[x];
        rep.check(same, "D(p)D(s) != D(ps) at k=" + std::to_string(k));
      }

  // tr[D(κ)^Γ D(π)] = d_A^{c(κπ)} d_B^{c(κ⁻¹π)} on (C^{d_A} ⊗ C^{d_B})^{⊗k},
  // ordered as A^{⊗k} ⊗ B^{⊗k}; Γ transposes every B factor entrywise.
  for (int k = 1; k <= kcap; ++k) {
    Permutation kappa = Permutation::long_cycle(k);
    for (long da = 1; da <= 3; ++da)
      for (long db = 1; db <= 3; ++db) {
        auto ka = permutation_operator(kappa, da), kb = permutation_operator(kappa, db);
        std::size_t nb = kb.size();
        // nonzero entries of D(κ): column x = (xa, xb) -> row (ka[xa], kb[xb]);
        // after Γ: entry (row_a, col_b) , (col_a, row_b)
        std::map<std::pair<std::size_t, std::size_t>, int> gamma;
        for (std::size_t xa = 0; xa < ka.size(); ++xa)
          for (std::size_t xb = 0; xb < nb; ++xb) {
            std::size_t row = ka[xa] * nb + xb;
            std::size_t col = xa * nb + kb[xb];
            gamma[{row, col}] += 1;
          }
        for (const auto& p : enumerate_sk(k)) {
          auto pa = permutation_operator(p, da), pb = permutation_operator(p, db);
          // tr[Γ D(π)] = Σ_x Γ[x, D(π)x]
          long trace = 0;
          for (std::size_t xa = 0; xa < pa.size(); ++xa)
            for (std::size_t xb = 0; xb < nb; ++xb) {
              auto it = gamma.find({xa * nb + xb, pa[xa] * nb + pb[xb]});
              if (it != gamma.end()) trace += it->second;
            }
          long expected = ipow(BigInt(da), static_cast<unsigned long>(cycle_count(compose(kappa, p)))).get_si() *
                          ipow(BigInt(db), static_cast<unsigned long>(cycle_count(compose(inverse(kappa), p)))).get_si();
          std::ostringstream where;
          where << "k=" << k << " dA=" << da << " dB=" << db << " pi=[";
          for (int v : p.one_line()) where << v;
          where << "]";
          rep.check(trace == expected, where.str() + ": trace " + std::to_string(trace) + " vs " + std::to_string(expected));
          if (k == 2 && da == 2 && db == 2 && p.is_identity()) {
            samples.push_back({{"k", 2}, {"d_a", 2}, {"d_b", 2}, {"pi", "e"}, {"trace", trace}});
          }
        }
      }
  }

  // tr X^k = tr[D(κ) X^{⊗k}] on random complex X
  RngStream rng(seed, 0);
  for (int k = 1; k <= kcap; ++k)
    for (long d = 1; d <= 3; ++d) {
      Matrix x(d, d);
      for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) x(i, j) = rng.complex_normal();
      Matrix xk = x;
      for (int m = 1; m < k; ++m) xk = xk * x;
      Complex direct = xk.trace();
      auto dk = permutation_operator(Permutation::long_cycle(k), d);
      // tr[D X^{⊗k}] = Σ_x (X^{⊗k})_{x, D^{-1}...}: Σ_x ⟨D x| D X^{⊗k} |x⟩ form via
      // tr[D Y] = Σ_x Y_{x, y} with D e_y = e_x, i.e. y ranging over preimages
      std::vector<std::size_t> pre(dk.size());
      for (std::size_t y = 0; y < dk.size(); ++y) pre[dk[y]] = y;
      Complex via_perm = 0;
      for (std::size_t row = 0; row < dk.size(); ++row) {
        // Y = X^{⊗k}; (D Y)_{row,row} = Y_{pre[row], row}
        std::size_t a = pre[row], b = row;
        Complex prod = 1;
        for (int m = k - 1; m >= 0; --m) {
          prod *= x(static_cast<long>(a % static_cast<std::size_t>(d)), static_cast<long>(b % static_cast<std::size_t>(d)));
          a /= static_cast<std::size_t>(d);
          b /= static_cast<std::size_t>(d);
        }
        via_perm += prod;
      }
      double scale = std::max(1.0, std::abs(direct));
      rep.check(std::abs(direct - via_perm) <= 1e-10 * scale,
                "tr X^k != tr D(kappa) X^{(x)k} at k=" + std::to_string(k) + " d=" + std::to_string(d));
    }
  rep.details["examples"] = samples;
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma2", "adrianov", "gram", "characters", "series", "trace"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, int kmax, std::uint64_t seed = 0) {
  if (name == "lemma2") return verify_lemma2(kmax);
  if (name == "adrianov") return verify_adrianov(kmax);
  if (name == "gram") return verify_gram(kmax);
  if (name == "characters") return verify_characters(kmax);
  if (name == "series") return verify_series(kmax);
  if (name == "trace") return verify_trace_identity(kmax, seed);
  throw UsageError("verify: unknown suite '" + name + "'");
}

inline std::vector<SuiteReport> verify_suites(int kmax, std::uint64_t seed = 0) {
  require_suite_kmax(kmax);
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, kmax, seed));
  return out;
}

}  // namespace haarpt
