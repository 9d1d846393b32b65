#pragma once

#include <map>
#include <mutex>
#include <utility>

namespace haarpt {

// Thread-safe memo table. Values are computed outside the lock, so two
// threads may compute the same entry; the first insert wins and both see
// identical values because every cached function is deterministic.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace haarpt
