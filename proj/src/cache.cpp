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

#include "refcurves/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "refcurves/errors.hpp"
#include "refcurves/serialize.hpp"

namespace refcurves {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i)
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

namespace {

Json key_material(const IntegralKey& key) {
  return Json{{"version", std::string(kCacheVersion)},
              {"model", key.model},
              {"n", key.n},
              {"integrand", key.integrand},
              {"x_order", key.x_order}};
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

[[noreturn]] void corrupt(const fs::path& path, const std::string& why) {
  std::error_code ec;
  fs::rename(path, fs::path(path).concat(".corrupt"), ec);
  throw CacheCorruption("cache entry " + path.filename().string() + ": " + why);
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string DiskCache::key_hash(const IntegralKey& key) {
  return sha256_hex(key_material(key).dump());
}

fs::path DiskCache::entry_path(const IntegralKey& key) const {
  return dir_ / (key_hash(key) + ".json");
}

std::optional<LSeries> DiskCache::load(const IntegralKey& key) {
  const fs::path path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  in.close();

  Json entry;
  try {
    entry = Json::parse(buf.str());
  } catch (const Json::parse_error&) {
    corrupt(path, "not valid JSON");
  }
  if (!entry.is_object() || !entry.contains("version") || !entry["version"].is_string())
    corrupt(path, "missing version");
  if (entry["version"].get<std::string>() != kCacheVersion) return std::nullopt;
  for (const char* field : {"key", "value", "checksum"})
    if (!entry.contains(field)) corrupt(path, std::string("missing ") + field);
  if (entry["key"] != key_material(key)) corrupt(path, "key collision");
  const std::string value_text = entry["value"].dump();
  const Json& checksum = entry["checksum"];
  if (!checksum.is_string() || checksum.get<std::string>() != sha256_hex(value_text))
    corrupt(path, "checksum mismatch");
  try {
    return lseries_from_json(entry["value"]);
  } catch (const SeriesError& e) {
    corrupt(path, e.what());
  }
}

void DiskCache::store(const IntegralKey& key, const LSeries& value) {
  const fs::path path = entry_path(key);
  if (fs::exists(path)) return;
  const Json v = to_json(value);
  const Json entry{{"key", key_material(key)},
                   {"version", std::string(kCacheVersion)},
                   {"value", v},
                   {"checksum", sha256_hex(v.dump())},
                   {"created", utc_now()}};
  std::random_device rd;
  const fs::path tmp =
      fs::path(path).concat(".tmp" + std::to_string(rd()) + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump(1) << '\n';
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot publish cache entry " + path.string());
  }
}

std::optional<LSeries> RecoveringStore::load(const IntegralKey& key) {
  try {
    return inner_.load(key);
  } catch (const CacheCorruption& e) {
    ++corrupt_;
    std::cerr << "warning: " << e.what() << "; recomputing\n";
    return std::nullopt;
  }
}

void RecoveringStore::store(const IntegralKey& key, const LSeries& value) {
  inner_.store(key, value);
}

}  // namespace refcurves
