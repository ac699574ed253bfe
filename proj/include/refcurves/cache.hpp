// Copyright 2026 The refcurves Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFCURVES_CACHE_HPP
#define REFCURVES_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "refcurves/localize.hpp"

namespace refcurves {

inline constexpr std::string_view kCacheVersion = "refcurves-integrals-1";

// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

// Write-once store of per-n integrals, one JSON file per key under `dir`.
// Files are published by write-then-rename.
class DiskCache : public IntegralStore {
 public:
  explicit DiskCache(std::filesystem::path dir);

  // Entries from another cache version read as misses. A malformed entry, a
  // checksum mismatch or a key collision moves the file aside and throws
  // CacheCorruption.
  std::optional<LSeries> load(const IntegralKey& key) override;
  // No-op if a readable entry already exists.
  void store(const IntegralKey& key, const LSeries& value) override;

  static std::string key_hash(const IntegralKey& key);
  std::filesystem::path entry_path(const IntegralKey& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Recomputes on corruption instead of failing: wraps another store and
// reports corrupt entries on stderr.
class RecoveringStore : public IntegralStore {
 public:
  explicit RecoveringStore(IntegralStore& inner) : inner_(inner) {}
  std::optional<LSeries> load(const IntegralKey& key) override;
  void store(const IntegralKey& key, const LSeries& value) override;
  int corrupt_entries() const { return corrupt_; }

 private:
  IntegralStore& inner_;
  int corrupt_ = 0;
};

}  // namespace refcurves

#endif  // REFCURVES_CACHE_HPP
