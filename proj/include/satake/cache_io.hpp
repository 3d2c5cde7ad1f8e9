#pragma once

#include <string>

#include "satake/multiplicity.hpp"

namespace satake {

inline constexpr int kPartitionCacheFormatVersion = 1;

// Loads persisted partition values. A missing file, unparsable content, a
// wrong version, or malformed entries all yield an empty cache (a miss);
// `*corrupt` reports whether an existing file had to be discarded.
PartitionCache load_partition_cache(const std::string& path, bool* corrupt = nullptr);

// Persists the final partition values (transient DP states are not written).
void save_partition_cache(const PartitionCache& cache, const std::string& path);

}  // namespace satake
