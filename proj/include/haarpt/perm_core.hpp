#pragma once

// Permutation arithmetic and the cycle-structure combinatorics that control
// which permutations dominate moment sums: geodesic defects, Catalan and
// Adrianov counts, and primitive factorizations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/class_cache.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/partition.hpp"

namespace haarpt {

// Element of S_k. Stored zero-based: images()[i] is the image of point i.
// one_line() gives the conventional 1-based one-line notation.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int k) {
    require(k >= 1, "permutation degree must be at least 1");
    std::vector<int> img(static_cast<std::size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  // The standard long cycle i -> i+1 (mod k).
  static Permutation long_cycle(int k) {
    require(k >= 1, "permutation degree must be at least 1");
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % k;
    return Permutation(std::move(img));
  }

  static Permutation from_one_line(const std::vector<int>& one_based) {
    std::vector<int> img;
    img.reserve(one_based.size());
    for (int x : one_based) img.push_back(x - 1);
    return Permutation(std::move(img));
  }

  // Cycles given with 1-based points, e.g. from_cycles(4, {{1, 2}, {3, 4}}).
  static Permutation from_cycles(int k, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(k);
    std::vector<bool> used(static_cast<std::size_t>(k), false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i] - 1;
        int to = cyc[(i + 1) % cyc.size()] - 1;
        require(from >= 0 && from < k && to >= 0 && to < k, "cycle point out of range");
        require(!used[static_cast<std::size_t>(from)], "cycles must be disjoint");
        used[static_cast<std::size_t>(from)] = true;
        p.images_[static_cast<std::size_t>(from)] = to;
      }
    }
    return p;
  }

  // Consecutive cycles 1..l1, l1+1..l1+l2, ... realizing a cycle type.
  static Permutation representative(const CycleType& type) {
    int k = type.weight();
    Permutation p = identity(k);
    int start = 0;
    for (int len : type.parts()) {
      for (int i = 0; i < len; ++i) {
        p.images_[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
      }
      start += len;
    }
    return p;
  }

  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {
    int k = static_cast<int>(images_.size());
    require(k >= 1, "permutation degree must be at least 1");
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      require(x >= 0 && x < k, "permutation image out of range");
      require(!seen[static_cast<std::size_t>(x)], "permutation images must be a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const { return images_; }

  std::vector<int> one_line() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (int x : images_) out.push_back(x + 1);
    return out;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// (p ∘ q)(i) = p(q(i)): q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), "compose: degree mismatch");
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(i)] = p(q(i));
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) img[static_cast<std::size_t>(p(i))] = i;
  return Permutation(std::move(img));
}

namespace detail {

// Cycle count of a zero-based image array of length k <= 32.
template <class Images>
int cycle_count_raw(const Images& img, int k) {
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < k; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (1u << j)); j = img[j]) seen |= 1u << j;
  }
  return cycles;
}

template <class Images>
std::vector<int> cycle_lengths_raw(const Images& img, int k) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int i = 0; i < k; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img[j]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

// Packs the multiplicities m_1..m_k (each < 16) of a cycle type into 64 bits.
template <class Images>
std::uint64_t cycle_type_key_raw(const Images& img, int k) {
  std::uint32_t seen = 0;
  std::uint64_t key = 0;
  for (int i = 0; i < k; ++i) {
    if (seen & (1u << i)) continue;
    int len = 0;
    for (int j = i; !(seen & (1u << j)); j = img[j]) {
      seen |= 1u << j;
      ++len;
    }
    key += std::uint64_t{1} << (4 * (len - 1));
  }
  return key;
}

inline CycleType cycle_type_from_key(std::uint64_t key, int k) {
  std::vector<int> parts;
  for (int len = k; len >= 1; --len) {
    int mult = static_cast<int>((key >> (4 * (len - 1))) & 0xF);
    for (int i = 0; i < mult; ++i) parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

}  // namespace detail

inline int cycle_count(const Permutation& p) { return detail::cycle_count_raw(p.images(), p.degree()); }

inline CycleType cycle_type(const Permutation& p) {
  return CycleType(detail::cycle_lengths_raw(p.images(), p.degree()));
}

// Transposition distance in the Cayley graph: k - c(p^{-1} q).
inline int geodesic_distance(const Permutation& p, const Permutation& q) {
  require(p.degree() == q.degree(), "geodesic_distance: degree mismatch");
  return p.degree() - cycle_count(compose(inverse(p), q));
}

// Size of the conjugacy class: k! / prod_i (i^{m_i} m_i!).
inline BigInt class_size(const CycleType& type) {
  BigInt denom = 1;
  for (int len = 1; len <= type.weight(); ++len) {
    int m = type.multiplicity(len);
    if (m == 0) continue;
    denom *= ipow(len, static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(m));
  }
  return exact_div(factorial(static_cast<unsigned long>(type.weight())), denom, "class_size");
}

// Lexicographic stream over S_k in one-line notation.
class SymmetricGroup {
 public:
  static constexpr int kMaxDegree = 10;

  explicit SymmetricGroup(int k) : k_(k) {
    require(k >= 1, "enumerate_sk: k must be positive");
    require_feasible(k <= kMaxDegree, "enumerate_sk: k > 10 is not enumerable");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using reference = const Permutation&;
    using pointer = const Permutation*;

    iterator() = default;
    explicit iterator(int k) : current_(Permutation::identity(k)), images_(current_.images().begin(), current_.images().end()), done_(false) {}

    const Permutation& operator*() const { return current_; }
    iterator& operator++() {
      if (std::next_permutation(images_.begin(), images_.end())) {
        current_ = Permutation(images_);
      } else {
        done_ = true;
      }
      return *this;
    }
    iterator operator++(int) {
      iterator before = *this;
      ++*this;
      return before;
    }
    const Permutation* operator->() const { return &current_; }
    bool operator==(const iterator& other) const { return done_ == other.done_; }

   private:
    Permutation current_;
    std::vector<int> images_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(k_); }
  iterator end() const { return iterator(); }
  int degree() const { return k_; }

 private:
  int k_;
};

inline SymmetricGroup enumerate_sk(int k) { return SymmetricGroup(k); }

// Allocation-free lexicographic visit of S_k; f receives the zero-based
// image array. Used by the hot loops that enumerate up to 10! elements.
template <class F>
void for_each_permutation(int k, F&& f) {
  require(k >= 1, "for_each_permutation: k must be positive");
  require_feasible(k <= 12, "for_each_permutation: k too large");
  std::array<int, 16> img{};
  std::iota(img.begin(), img.begin() + k, 0);
  do {
    f(static_cast<const std::array<int, 16>&>(img));
  } while (std::next_permutation(img.begin(), img.begin() + k));
}

// --- Catalan, Adrianov, and defect-count bounds ---------------------------

inline BigInt catalan(unsigned long n) {
  return exact_div(binomial(2 * n, n), BigInt(n + 1), "catalan");
}

// B_g(k) via (k+1) B_g(k) = 2(2k-1) B_g(k-1) + (k-2)(k-1)^2 B_{g-1}(k-2),
// seeded by B_0(1) = 1, B_0(2) = 2 and B_g(k) = 0 for g < 0.
inline BigInt adrianov_B(int g, int k) {
  require(k >= 1, "adrianov_B: k must be positive");
  if (g < 0) return 0;
  static MemoTable<std::pair<int, int>, BigInt> memo;
  return memo.get({g, k}, [&]() -> BigInt {
    if (k == 1) return g == 0 ? 1 : 0;
    if (k == 2) return g == 0 ? 2 : 0;
    BigInt rhs = BigInt(2 * (2 * k - 1)) * adrianov_B(g, k - 1);
    if (g >= 1) rhs += BigInt(k - 2) * BigInt(k - 1) * BigInt(k - 1) * adrianov_B(g - 1, k - 2);
    return exact_div(rhs, BigInt(k + 1), "adrianov_B recurrence");
  });
}

// ceil(4^{k-1} k^{3δ/2 + 1}); odd δ is handled as ceil(sqrt(16^{k-1} k^{3δ+2})).
inline BigInt lemma2_count_bound(int k, int delta) {
  require(k >= 1, "lemma2_count_bound: k must be positive");
  require(delta >= 0, "lemma2_count_bound: delta must be non-negative");
  auto uk = static_cast<unsigned long>(k);
  if (delta % 2 == 0) {
    return ipow(4, uk - 1) * ipow(BigInt(k), static_cast<unsigned long>(3 * delta / 2 + 1));
  }
  return ceil_sqrt(ipow(16, uk - 1) * ipow(BigInt(k), static_cast<unsigned long>(3 * delta + 2)));
}

struct DefectCount {
  int g = 0;
  std::uint64_t count = 0;
};

// hist[δ] = |{σ : c(π^{-1}σ) + c(σ) = k + c(π) - δ}|, a class function of π.
inline std::vector<std::uint64_t> defect_histogram(const Permutation& p) {
  int k = p.degree();
  require_feasible(k <= 9, "defect counting: k > 9 is not enumerable");
  static MemoTable<CycleType, std::vector<std::uint64_t>> memo;
  return memo.get(cycle_type(p), [&] {
    Permutation rep = Permutation::representative(cycle_type(p));
    Permutation rep_inv = inverse(rep);
    int top = k + cycle_count(rep);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(2 * k + 1), 0);
    std::array<int, 16> prod{};
    for_each_permutation(k, [&](const std::array<int, 16>& sigma) {
      for (int i = 0; i < k; ++i) prod[static_cast<std::size_t>(i)] = rep_inv(sigma[static_cast<std::size_t>(i)]);
      int lhs = detail::cycle_count_raw(prod, k) + detail::cycle_count_raw(sigma, k);
      if (lhs > top) throw InternalCheckError("defect histogram: c(π^{-1}σ) + c(σ) exceeds k + c(π)");
      ++hist[static_cast<std::size_t>(top - lhs)];
    });
    return hist;
  });
}

// N_g(π): permutations at defect δ = 2g from π.
inline DefectCount count_defect(const Permutation& p, int g) {
  require(g >= 0, "count_defect: g must be non-negative");
  auto hist = defect_histogram(p);
  auto delta = static_cast<std::size_t>(2 * g);
  return {g, delta < hist.size() ? hist[delta] : 0};
}

// w_len(σ) for every σ ∈ S_k: DP over (partial product, largest t so far)
// across sequences of transpositions (s_1 t_1)...(s_len t_len) with s_i < t_i
// and t_1 <= ... <= t_len, multiplied left to right under compose.
inline std::map<Permutation, BigInt> primitive_factorization_table(int k, int len) {
  require(k >= 1 && len >= 0, "primitive_factorization_table: bad arguments");
  require_feasible(k <= 6 && len <= 8, "primitive factorizations: requires k <= 6 and len <= 8");
  static MemoTable<std::pair<int, int>, std::map<Permutation, BigInt>> memo;
  return memo.get({k, len}, [&] {
    std::map<std::pair<Permutation, int>, BigInt> layer;
    layer[{Permutation::identity(k), 0}] = 1;
    for (int step = 0; step < len; ++step) {
      std::map<std::pair<Permutation, int>, BigInt> next;
      for (const auto& [state, count] : layer) {
        const auto& [prod, last_t] = state;
        for (int t = std::max(last_t, 1); t < k; ++t) {
          for (int s = 0; s < t; ++s) {
            std::vector<int> img(prod.images().begin(), prod.images().end());
            // prod ∘ (s t) swaps the images of s and t.
            std::swap(img[static_cast<std::size_t>(s)], img[static_cast<std::size_t>(t)]);
            next[{Permutation(std::move(img)), t}] += count;
          }
        }
      }
      layer = std::move(next);
    }
    std::map<Permutation, BigInt> table;
    for (const auto& [state, count] : layer) table[state.first] += count;
    return table;
  });
}

inline BigInt primitive_factorization_count(const Permutation& p, int len) {
  auto table = primitive_factorization_table(p.degree(), len);
  auto it = table.find(p);
  return it == table.end() ? BigInt(0) : it->second;
}

}  // namespace haarpt
