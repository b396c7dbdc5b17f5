#include "simulgame/memo_table.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace simulgame {

MemoTable::MemoTable(std::size_t limit) : limit_(limit) {}

MemoTable::Shard& MemoTable::shard_for(const std::string& key) const {
  return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<Rational> MemoTable::find(const std::string& key) const {
  Shard& s = shard_for(key);
  std::shared_lock lock(s.mutex);
  auto it = s.map.find(key);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const std::string& key, const Rational& value) {
  Shard& s = shard_for(key);
  std::unique_lock lock(s.mutex);
  auto it = s.map.find(key);
  if (it != s.map.end()) {
    if (it->second != value)
      throw std::logic_error("memo conflict for " + key + ": " + it->second.get_str() + " vs " +
                             value.get_str());
    return;
  }
  if (size_.load(std::memory_order_relaxed) >= limit_) return;
  s.map.emplace(key, value);
  size_.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace simulgame
