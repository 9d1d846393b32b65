#pragma once

// Exact expected moments E tr[(M^Γ)^k] for the projector M onto a
// Haar-random r-dimensional subspace of C^{d_A} ⊗ C^{d_B}.
//
// M^{(k)} = E[U^{⊗k} M_0^{⊗k} U^{†⊗k}] = Σ_π α_π D(π), and the moment is
// Σ_π d_A^{c(κπ)} d_B^{c(κ^{-1}π)} α_π with κ the long cycle i -> i+1.
// α is a class function, so S_k is enumerated once per k and binned by
// (cycle type of π, c(κπ), c(κ^{-1}π)); the bins are reused for every
// (d_A, d_B, r).

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "haarpt/bignum.hpp"
#include "haarpt/class_cache.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/parallel.hpp"
#include "haarpt/partition.hpp"
#include "haarpt/perm_core.hpp"
#include "haarpt/sym_rep.hpp"
#include "haarpt/weingarten.hpp"

namespace haarpt {

enum class Branch {
  kRankAboveRatio,  // r >= d_B / d_A
  kRankBelowRatio,  // r < d_B / d_A
};

inline const char* to_string(Branch b) {
  return b == Branch::kRankAboveRatio ? "r>=dB/dA" : "r<=dB/dA";
}

// Dimensions of a random subspace problem. Stored with d_A <= d_B; the
// constructor swaps the factors if needed (the moment and the spectrum of
// the partial transpose are invariant under relabeling the factors).
class SubspaceSpec {
 public:
  SubspaceSpec(long d_a, long d_b, long r) : d_a_(std::min(d_a, d_b)), d_b_(std::max(d_a, d_b)), r_(r) {
    require(d_a >= 1 && d_b >= 1, "SubspaceSpec: dimensions must be positive");
    require(r >= 1, "SubspaceSpec: r must be positive");
    require(r <= d_a * d_b, "SubspaceSpec: r must not exceed d_A * d_B");
  }

  long d_a() const { return d_a_; }
  long d_b() const { return d_b_; }
  long r() const { return r_; }
  long d() const { return d_a_ * d_b_; }
  long m() const { return std::min({r_, d_a_, d_b_}); }

  // Boundary r = d_B / d_A is assigned to the large-rank branch.
  Branch branch() const { return r_ * d_a_ >= d_b_ ? Branch::kRankAboveRatio : Branch::kRankBelowRatio; }

  bool operator==(const SubspaceSpec&) const = default;

 private:
  long d_a_, d_b_, r_;
};

struct PermExpansion {
  int k = 0;
  std::map<CycleType, Rational> coefficients;

  const Rational& at(const CycleType& mu) const { return coefficients.at(mu); }
};

// Isotypic route: M^{(k)} = Σ_λ (s_λ(1^r)/s_λ(1^d)) P_λ with
// P_λ = (f^λ/k!) Σ_π χ^λ(π) D(π), giving
//   α(μ) = (1/k!) Σ_{λ, ℓ(λ) <= r} f^λ s_λ(1^r)/s_λ(1^d) χ^λ(μ).
// For d >= k this is the unique expansion; for d < k the D(π) are dependent
// and this is the canonical choice (components with ℓ(λ) > d vanish anyway).
inline PermExpansion alpha_coefficients(long d, long r, int k) {
  require(k >= 1, "alpha_coefficients: k must be positive");
  require(r >= 1 && r <= d, "alpha_coefficients: requires 1 <= r <= d");
  require_feasible(k <= 10, "alpha_coefficients: k > 10 not supported");
  static MemoTable<std::tuple<long, long, int>, PermExpansion> memo;
  return memo.get({d, r, k}, [&] {
    PermExpansion out{k, {}};
    auto lams = partitions_of(k);
    std::vector<Rational> weight;
    for (const auto& lam : lams) {
      if (lam.length() > r) {
        weight.emplace_back(0);
        continue;
      }
      weight.push_back(make_rational(syt_count(lam) * schur_dim(lam, r), schur_dim(lam, d)));
    }
    Rational inv_kf(1, factorial(static_cast<unsigned long>(k)));
    for (const auto& mu : cycle_types_of(k)) {
      Rational a = 0;
      for (std::size_t i = 0; i < lams.size(); ++i) {
        if (weight[i] == 0) continue;
        a += weight[i] * Rational(mn_character(lams[i], mu).value);
      }
      out.coefficients.emplace(mu, Rational(a * inv_kf));
    }
    return out;
  });
}

inline PermExpansion alpha_coefficients(const SubspaceSpec& spec, int k) {
  return alpha_coefficients(spec.d(), spec.r(), k);
}

// Direct route: α_π = Σ_σ Wg(π^{-1}σ, d) r^{c(σ)}. Independent of the
// isotypic formula; used to cross-check it. Requires d >= k.
inline PermExpansion alpha_coefficients_wg_sum(long d, long r, int k) {
  require(d >= k, "alpha_coefficients_wg_sum: requires d >= k");
  require_feasible(k <= 8, "alpha_coefficients_wg_sum: k > 8 not supported");
  PermExpansion out{k, {}};
  for (const auto& mu : cycle_types_of(k)) {
    Permutation rep_inv = inverse(Permutation::representative(mu));
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> hist;
    std::array<int, 16> prod{};
    for_each_permutation(k, [&](const std::array<int, 16>& sigma) {
      for (int i = 0; i < k; ++i) prod[static_cast<std::size_t>(i)] = rep_inv(sigma[static_cast<std::size_t>(i)]);
      ++hist[{detail::cycle_type_key_raw(prod, k), detail::cycle_count_raw(sigma, k)}];
    });
    Rational a = 0;
    for (const auto& [key, count] : hist) {
      CycleType type = detail::cycle_type_from_key(key.first, k);
      a += Rational(BigInt(static_cast<unsigned long>(count))) * wg_exact(type, d).value *
           Rational(ipow(BigInt(r), static_cast<unsigned long>(key.second)));
    }
    out.coefficients.emplace(mu, a);
  }
  return out;
}

// One bin of the S_k enumeration: count of π with the given cycle type,
// c(κπ) = a and c(κ^{-1}π) = b.
struct MomentBin {
  CycleType type;
  int a = 0;
  int b = 0;
  std::uint64_t count = 0;

  bool operator==(const MomentBin&) const = default;
};

// Enumerates S_k once; chunks by the first image value. Integer sums, so the
// result is independent of the thread count.
inline std::vector<MomentBin> compute_moment_bins(int k, int threads = 1) {
  require(k >= 1, "moment bins: k must be positive");
  require_feasible(k <= 10, "moment bins: k > 10 is not enumerable");
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(static_cast<std::size_t>(k));
  parallel_for(static_cast<std::size_t>(k), threads, [&](std::size_t first) {
    auto& local = partial[first];
    std::array<int, 16> img{};
    img[0] = static_cast<int>(first);
    for (int i = 1, v = 0; i < k; ++i, ++v) {
      if (v == static_cast<int>(first)) ++v;
      img[static_cast<std::size_t>(i)] = v;
    }
    std::array<int, 16> up{}, down{};
    do {
      for (int i = 0; i < k; ++i) {
        int x = img[static_cast<std::size_t>(i)];
        up[static_cast<std::size_t>(i)] = x + 1 == k ? 0 : x + 1;
        down[static_cast<std::size_t>(i)] = x == 0 ? k - 1 : x - 1;
      }
      std::uint64_t key = (detail::cycle_type_key_raw(img, k) << 8) |
                          static_cast<std::uint64_t>(detail::cycle_count_raw(up, k) << 4) |
                          static_cast<std::uint64_t>(detail::cycle_count_raw(down, k));
      ++local[key];
    } while (std::next_permutation(img.begin() + 1, img.begin() + k));
  });
  std::map<std::tuple<CycleType, int, int>, std::uint64_t> merged;
  for (const auto& local : partial) {
    for (const auto& [key, count] : local) {
      CycleType type = detail::cycle_type_from_key(key >> 8, k);
      merged[{type, static_cast<int>((key >> 4) & 0xF), static_cast<int>(key & 0xF)}] += count;
    }
  }
  std::vector<MomentBin> bins;
  bins.reserve(merged.size());
  for (auto& [key, count] : merged) bins.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  return bins;
}

inline std::vector<MomentBin> moment_bins(int k, int threads = 1) {
  static MemoTable<int, std::vector<MomentBin>> memo;
  return memo.get(k, [&] { return compute_moment_bins(k, threads); });
}

// On-disk bin cache. JSON document:
//   {"format": "haarpt-moment-bins", "version": 1,
//    "bins": {"<k>": [[[cycle type parts...], a, b, "count"], ...]}}
// Always regenerable; a missing or unreadable file is recomputed.
class BinCache {
 public:
  static constexpr int kVersion = 1;

  explicit BinCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  std::vector<MomentBin> bins(int k, int threads = 1) {
    if (k < 8) return moment_bins(k, threads);
    if (auto cached = load(k)) return *cached;
    auto bins = moment_bins(k, threads);
    store(k, bins);
    return bins;
  }

  std::optional<std::vector<MomentBin>> load(int k) const {
    auto doc = read_document();
    if (!doc || !doc->contains("bins")) return std::nullopt;
    const auto& all = (*doc)["bins"];
    auto key = std::to_string(k);
    if (!all.contains(key)) return std::nullopt;
    std::vector<MomentBin> out;
    for (const auto& row : all[key]) {
      out.push_back({CycleType(row.at(0).get<std::vector<int>>()), row.at(1).get<int>(), row.at(2).get<int>(),
                     std::stoull(row.at(3).get<std::string>())});
    }
    return out;
  }

  void store(int k, const std::vector<MomentBin>& bins) const {
    auto doc = read_document().value_or(nlohmann::json::object());
    doc["format"] = "haarpt-moment-bins";
    doc["version"] = kVersion;
    auto rows = nlohmann::json::array();
    for (const auto& bin : bins) rows.push_back({bin.type.parts(), bin.a, bin.b, std::to_string(bin.count)});
    doc["bins"][std::to_string(k)] = std::move(rows);
    std::ofstream out(path_);
    out << doc.dump() << "\n";
  }

 private:
  std::optional<nlohmann::json> read_document() const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || doc.value("format", "") != "haarpt-moment-bins" || doc.value("version", 0) != kVersion)
      return std::nullopt;
    return doc;
  }

  std::filesystem::path path_;
};

// Σ_bins count · d_A^a d_B^b · α(type), for factors in either order.
inline Rational exact_moment_from_bins(long d_a, long d_b, long r, int k, const std::vector<MomentBin>& bins) {
  PermExpansion alpha = alpha_coefficients(d_a * d_b, r, k);
  Rational total = 0;
  for (const auto& bin : bins) {
    BigInt weight = BigInt(static_cast<unsigned long>(bin.count)) * ipow(BigInt(d_a), static_cast<unsigned long>(bin.a)) *
                    ipow(BigInt(d_b), static_cast<unsigned long>(bin.b));
    total += Rational(weight) * alpha.at(bin.type);
  }
  return total;
}

// E tr[(M^Γ)^k] with the dimensions taken verbatim (no d_A <= d_B swap).
inline Rational exact_moment_dims(long d_a, long d_b, long r, int k) {
  require(d_a >= 1 && d_b >= 1 && r >= 1 && r <= d_a * d_b, "exact_moment: invalid dimensions");
  require(k >= 1, "exact_moment: k must be positive");
  require_feasible(k <= 10, "exact_moment: k > 10 is not enumerable");
  return exact_moment_from_bins(d_a, d_b, r, k, moment_bins(k));
}

inline Rational exact_moment(const SubspaceSpec& spec, int k) {
  return exact_moment_dims(spec.d_a(), spec.d_b(), spec.r(), k);
}

struct LPTriple {
  int a = 0, b = 0, c = 0;

  // Necessary conditions for N(a,b,c) > 0.
  bool valid(int k) const { return a + b <= k + 2 && a + c <= k + 1 && b + c <= k + 1; }

  auto operator<=>(const LPTriple&) const = default;
};

// N(a,b,c) = |{π : c(κπ) = a, c(κ^{-1}π) = b, c(π) = c}|; only nonzero entries.
inline std::map<LPTriple, BigInt> count_Nabc(int k) {
  require(k >= 1, "count_Nabc: k must be positive");
  require_feasible(k <= 8, "count_Nabc: k > 8 not supported");
  std::map<LPTriple, BigInt> out;
  for (const auto& bin : moment_bins(k)) out[{bin.a, bin.b, bin.type.length()}] += BigInt(static_cast<unsigned long>(bin.count));
  return out;
}

}  // namespace haarpt
