#pragma once

#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace hopfgraph::detail {

// Concurrent reads, serialized inserts. Entries are never erased, so the
// returned references stay valid for the life of the table.
template <class Value>
class MemoTable {
 public:
  template <class Compute>
  const Value& get_or_compute(const std::string& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Value> table_;
};

}  // namespace hopfgraph::detail
