#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace tamari {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kCodeVersion = "tamari-0.1.0";

// FNV-1a hash of the code version, embedded in cache files so stale
// builds never serve stale payloads.
std::string code_version_hash();

// Returns the cached payload bytes when the file exists and carries the
// current schema and code versions; nullopt otherwise.  A malformed file
// reports as corrupt so the caller can warn and recompute.
struct CacheLookup {
  std::optional<std::string> payload;
  bool corrupt = false;
};
CacheLookup cache_load(const std::filesystem::path& dir,
                       const std::string& key);

// Atomic store: write to a temporary file, then rename.
void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const std::string& payload);

}  // namespace tamari
