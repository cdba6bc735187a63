#include "tamari/cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tamari {

std::string code_version_hash() {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : std::string(kCodeVersion)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

CacheLookup cache_load(const std::filesystem::path& dir,
                       const std::string& key) {
  std::filesystem::path file = dir / (key + ".json");
  if (!std::filesystem::exists(file)) return {};
  std::ifstream in(file);
  if (!in) return {std::nullopt, true};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    nlohmann::json j = nlohmann::json::parse(buf.str());
    if (j.at("schema").get<std::string>() != kSchemaVersion) return {};
    if (j.at("code").get<std::string>() != code_version_hash()) return {};
    if (j.at("key").get<std::string>() != key) return {std::nullopt, true};
    return {j.at("payload").get<std::string>(), false};
  } catch (const nlohmann::json::exception&) {
    return {std::nullopt, true};
  }
}

void cache_store(const std::filesystem::path& dir, const std::string& key,
                 const std::string& payload) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["code"] = code_version_hash();
  j["key"] = key;
  j["payload"] = payload;
  std::filesystem::path file = dir / (key + ".json");
  std::filesystem::path tmp = dir / (key + ".tmp");
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace tamari
