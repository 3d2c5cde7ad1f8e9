#include "satake/cache_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace satake {

PartitionCache load_partition_cache(const std::string& path, bool* corrupt) {
  if (corrupt) *corrupt = false;
  PartitionCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  nlohmann::json j;
  try {
    in >> j;
    if (!j.is_object() || j.value("version", -1) != kPartitionCacheFormatVersion) {
      if (corrupt) *corrupt = true;
      return cache;
    }
    const auto& entries = j.at("entries");
    if (!entries.is_object()) {
      if (corrupt) *corrupt = true;
      return cache;
    }
    for (const auto& [key, value] : entries.items()) {
      if (!value.is_number_integer() || value.get<Int>() < 0) {
        if (corrupt) *corrupt = true;
        return PartitionCache{};
      }
      cache.finals[key] = value.get<Int>();
    }
  } catch (const nlohmann::json::exception&) {
    if (corrupt) *corrupt = true;
    return PartitionCache{};
  }
  return cache;
}

void save_partition_cache(const PartitionCache& cache, const std::string& path) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, value] : cache.finals) entries[key] = value;
  nlohmann::json j;
  j["version"] = kPartitionCacheFormatVersion;
  j["entries"] = std::move(entries);
  std::ofstream out(path, std::ios::trunc);
  out << j.dump(1) << "\n";
}

}  // namespace satake
