#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace frobforge {

/// FNV-1a 64-bit. Stable across platforms; used for cache keys and payload
/// checksums.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ull) noexcept {
  std::uint64_t h = seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

/// Content-addressed key: two independent 64-bit hashes plus the length of the
/// canonical description.
inline std::string content_key(std::string_view canonical) {
  return hex64(fnv1a64(canonical)) + hex64(fnv1a64(canonical, 0x84222325cbf29ce4ull)) + "-" +
         std::to_string(canonical.size());
}

/// Insert-only key/value store shared by all computations in the process.
/// Values are deterministic functions of their keys, so concurrent inserts of
/// the same key are harmless.
///
/// On-disk format (one file, `<dir>/frobforge-cache.v1`), one record per line:
///
///     <key> TAB <hex fnv1a64 of payload> TAB <payload>
///
/// Payloads never contain tabs or newlines. Records whose checksum does not
/// match are dropped with a warning and recomputed on demand.
class ContentCache {
 public:
  static constexpr const char* kFileName = "frobforge-cache.v1";

  std::optional<std::string> get(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      ++misses_;
      return std::nullopt;
    }
    ++hits_;
    return it->second;
  }

  void put(const std::string& key, std::string value) {
    std::lock_guard lock(mutex_);
    if (entries_.emplace(key, std::move(value)).second) dirty_ = true;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
    hits_ = misses_ = 0;
    dirty_ = false;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }
  std::size_t hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }
  std::size_t misses() const {
    std::lock_guard lock(mutex_);
    return misses_;
  }

  /// Loads records from `dir`; returns the number of corrupt records skipped.
  std::size_t load(const std::filesystem::path& dir, std::ostream& warn = std::cerr) {
    std::ifstream in(dir / kFileName);
    if (!in) return 0;
    std::size_t bad = 0;
    std::string line;
    std::size_t lineno = 0;
    std::lock_guard lock(mutex_);
    while (std::getline(in, line)) {
      ++lineno;
      auto t1 = line.find('\t');
      auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
      if (t2 == std::string::npos) {
        ++bad;
        warn << "warning: cache record " << lineno << " is malformed; discarded\n";
        continue;
      }
      std::string key = line.substr(0, t1);
      std::string sum = line.substr(t1 + 1, t2 - t1 - 1);
      std::string payload = line.substr(t2 + 1);
      if (hex64(fnv1a64(payload)) != sum) {
        ++bad;
        warn << "warning: cache record " << lineno << " failed its checksum; discarded\n";
        continue;
      }
      entries_.emplace(std::move(key), std::move(payload));
    }
    if (bad > 0) dirty_ = true;
    return bad;
  }

  /// Rewrites the cache file with every record, sorted by key.
  void save(const std::filesystem::path& dir) const {
    std::lock_guard lock(mutex_);
    if (!dirty_ && std::filesystem::exists(dir / kFileName)) return;
    std::filesystem::create_directories(dir);
    auto tmp = dir / (std::string(kFileName) + ".tmp");
    {
      std::ofstream out(tmp, std::ios::trunc);
      for (const auto& [key, payload] : entries_) {
        out << key << '\t' << hex64(fnv1a64(payload)) << '\t' << payload << '\n';
      }
    }
    std::filesystem::rename(tmp, dir / kFileName);
    dirty_ = false;
  }

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::string> entries_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
  mutable bool dirty_ = false;
};

inline ContentCache& global_cache() {
  static ContentCache cache;
  return cache;
}

}  // namespace frobforge
