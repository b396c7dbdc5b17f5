#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "simulgame/rational.hpp"

namespace simulgame {

/// Sharded key -> value map. Readers take a shared lock on one shard.
/// Insertion is idempotent: re-inserting a key must carry an equal value,
/// otherwise std::logic_error is thrown. Once `limit` entries are stored,
/// further inserts are dropped (lookups keep working).
class MemoTable {
 public:
  explicit MemoTable(std::size_t limit);

  std::optional<Rational> find(const std::string& key) const;
  void insert(const std::string& key, const Rational& value);
  std::size_t size() const noexcept { return size_.load(std::memory_order_relaxed); }
  std::size_t limit() const noexcept { return limit_; }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, Rational> map;
  };

  Shard& shard_for(const std::string& key) const;

  std::size_t limit_;
  std::atomic<std::size_t> size_{0};
  mutable std::array<Shard, kShards> shards_;
};

}  // namespace simulgame
