// Copyright 2026 The g2c2 Authors
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

#ifndef G2C2_CACHE_HPP
#define G2C2_CACHE_HPP

#include <openssl/evp.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "g2c2/char2.hpp"
#include "g2c2/poly_io.hpp"

namespace g2c2 {

inline std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

/// The calibrated J-invariants and the characteristic-2 table built from them.
struct Tables {
  IgusaTable igusa;
  KTable k;
};

namespace detail {

inline constexpr const char* kTablesFormat = "g2c2-tables/1";

inline nlohmann::ordered_json invariant_to_json(const ScaledInvariant& j) {
  return {{"name", j.name}, {"degree", j.degree}, {"scale", j.value.scale.get_str()}, {"body", to_json(j.value.body)}};
}

inline ScaledInvariant invariant_from_json(const nlohmann::json& j) {
  mpq_class scale(j.at("scale").get<std::string>());
  scale.canonicalize();
  return {j.at("name").get<std::string>(), j.at("degree").get<unsigned>(),
          ScaledPoly(poly_from_json(j.at("body")), scale)};
}

inline nlohmann::ordered_json record_to_json(const InvariantRecord& r) {
  return {{"name", r.name}, {"weight", r.weight}, {"body", to_json(r.body)}};
}

inline InvariantRecord record_from_json(const nlohmann::json& j) {
  InvariantRecord r{j.at("name").get<std::string>(), j.at("weight").get<unsigned>(), poly_from_json(j.at("body"))};
  if (r.body.ring() != Ring::F2) throw ParseError("invariant " + r.name + " is not over F2");
  return r;
}

}  // namespace detail

inline nlohmann::ordered_json tables_to_json(const Tables& t) {
  nlohmann::ordered_json j;
  j["igusa"] = nlohmann::ordered_json::array();
  for (const auto* inv : t.igusa.all()) j["igusa"].push_back(detail::invariant_to_json(*inv));
  j["k"] = nlohmann::ordered_json::array();
  for (const auto* r : t.k.all()) j["k"].push_back(detail::record_to_json(*r));
  j["k4_combination"] = {t.k.k4_combination.x, t.k.k4_combination.y};
  j["j6_combination"] = {t.k.j6_combination.x, t.k.j6_combination.y, t.k.j6_combination.z};
  j["j6_reduction"] = to_json(t.k.j6_reduction);
  j["two_exponents"] = t.k.two_exponents;
  return j;
}

inline Tables tables_from_json(const nlohmann::json& j) {
  Tables t;
  const auto& ig = j.at("igusa");
  ScaledInvariant* slots[] = {&t.igusa.J2, &t.igusa.J4, &t.igusa.J6, &t.igusa.J8, &t.igusa.J10, &t.igusa.I4};
  if (ig.size() != std::size(slots)) throw ParseError("cached Igusa table has the wrong size");
  for (std::size_t i = 0; i < ig.size(); ++i) *slots[i] = detail::invariant_from_json(ig[i]);
  const auto& kj = j.at("k");
  InvariantRecord* ks[] = {&t.k.K1, &t.k.K2, &t.k.K3, &t.k.K4, &t.k.K8, &t.k.K10, &t.k.K12, &t.k.K15};
  if (kj.size() != std::size(ks)) throw ParseError("cached K-table has the wrong size");
  for (std::size_t i = 0; i < kj.size(); ++i) *ks[i] = detail::record_from_json(kj[i]);
  const auto& k4 = j.at("k4_combination");
  t.k.k4_combination = {k4.at(0).get<int>(), k4.at(1).get<int>()};
  const auto& j6 = j.at("j6_combination");
  t.k.j6_combination = {j6.at(0).get<int>(), j6.at(1).get<int>(), j6.at(2).get<int>()};
  t.k.j6_reduction = poly_from_json(j.at("j6_reduction"));
  t.k.two_exponents = j.at("two_exponents").get<std::map<std::string, long>>();
  return t;
}

inline Tables build_tables(std::uint64_t seed = 20240601) {
  Tables t;
  t.igusa = build_igusa_invariants(seed);
  t.k = build_k_table(t.igusa);
  return t;
}

/// $G2C2_CACHE if set, otherwise .g2c2-cache in the working directory.
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("G2C2_CACHE"); env && *env) return env;
  return ".g2c2-cache";
}

enum class CacheStatus { Hit, Miss, Rebuilt, Disabled };

inline const char* cache_status_name(CacheStatus s) {
  switch (s) {
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Rebuilt: return "rebuilt";
    case CacheStatus::Disabled: return "disabled";
  }
  return "?";
}

/// Content-addressed store for the built tables. The file name is the hash
/// of the build recipe; the file carries the hash of its payload, and a
/// payload whose hash does not match is discarded and rebuilt.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir, std::uint64_t seed = 20240601) : dir_(std::move(dir)), seed_(seed) {}

  std::string key() const {
    return sha256_hex(std::string(detail::kTablesFormat) + "\nseed=" + std::to_string(seed_));
  }
  std::filesystem::path path() const { return dir_ / ("tables-" + key().substr(0, 32) + ".json"); }

  /// Tables from the cache when valid; otherwise builds and stores them.
  Tables load_or_build(CacheStatus* status = nullptr) {
    const bool existed = std::filesystem::exists(path());
    if (auto t = load()) {
      if (status) *status = CacheStatus::Hit;
      return *t;
    }
    Tables t = build_tables(seed_);
    store(t);
    if (status) *status = existed ? CacheStatus::Rebuilt : CacheStatus::Miss;
    return t;
  }

  std::optional<Tables> load() const {
    std::ifstream in(path(), std::ios::binary);
    if (!in) return std::nullopt;
    try {
      const nlohmann::json doc = nlohmann::json::parse(in);
      if (doc.at("key").get<std::string>() != key()) return std::nullopt;
      const std::string payload = doc.at("payload").get<std::string>();
      if (sha256_hex(payload) != doc.at("payload_sha256").get<std::string>()) return std::nullopt;
      return tables_from_json(nlohmann::json::parse(payload));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  /// Writes to a temporary file and renames it into place, so readers never
  /// see a partial file.
  void store(const Tables& t) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // caching is best effort
    const std::string payload = tables_to_json(t).dump();
    nlohmann::ordered_json doc;
    doc["key"] = key();
    doc["payload_sha256"] = sha256_hex(payload);
    doc["payload"] = payload;
    const std::filesystem::path tmp = path().string() + ".tmp" + std::to_string(std::random_device{}());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return;
      out << doc.dump();
      if (!out) {
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, path(), ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  std::filesystem::path dir_;
  std::uint64_t seed_;
};

}  // namespace g2c2

#endif  // G2C2_CACHE_HPP
