#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "haarpt/errors.hpp"

namespace haarpt {

// A weakly decreasing sequence of positive integers. The tag keeps
// representation labels (Young diagrams) and conjugacy-class labels
// (cycle types) from being mixed up, although both have the same shape.
template <class Tag>
class IntegerPartition {
 public:
  IntegerPartition() = default;

  explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 1, "partition parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be non-increasing");
    }
  }

  IntegerPartition(std::initializer_list<int> parts) : IntegerPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  // Number of parts equal to `size`.
  int multiplicity(int size) const {
    int m = 0;
    for (int p : parts_) m += (p == size);
    return m;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  auto operator<=>(const IntegerPartition&) const = default;
  bool operator==(const IntegerPartition&) const = default;

 private:
  std::vector<int> parts_;
};

using Partition = IntegerPartition<struct YoungDiagramTag>;
using CycleType = IntegerPartition<struct CycleTypeTag>;

template <class To, class FromTag>
To relabel(const IntegerPartition<FromTag>& p) {
  return To(p.parts());
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// All partitions of k in reverse lexicographic order: (k), (k-1,1), ..., (1^k).
template <class P = Partition>
std::vector<P> partitions_of(int k) {
  require(k >= 1, "partitions_of: k must be positive");
  require_feasible(k <= 20, "partitions_of: k > 20 not supported");
  std::vector<std::vector<int>> raw;
  std::vector<int> prefix;
  detail::partitions_rec(k, k, prefix, raw);
  std::vector<P> out;
  out.reserve(raw.size());
  for (auto& parts : raw) out.emplace_back(std::move(parts));
  return out;
}

inline std::vector<CycleType> cycle_types_of(int k) { return partitions_of<CycleType>(k); }

}  // namespace haarpt
