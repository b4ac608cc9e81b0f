#include "curling/cache.hpp"

#include "curling/io.hpp"

#include <json.hpp>

namespace curling {

std::string Cache::stem(std::string_view table, std::string_view params) const {
  return std::string(table) + "-" + sha256_hex(params).substr(0, 16);
}

std::filesystem::path Cache::payload_path(std::string_view table, std::string_view params) const {
  return dir_ / (stem(table, params) + ".dat");
}

std::filesystem::path Cache::sidecar_path(std::string_view table, std::string_view params) const {
  return dir_ / (stem(table, params) + ".json");
}

std::optional<std::string> Cache::load(std::string_view table, std::string_view params, std::string* why) const {
  auto miss = [&](std::string reason) -> std::optional<std::string> {
    if (why) *why = std::move(reason);
    return std::nullopt;
  };
  const auto side = sidecar_path(table, params);
  if (!std::filesystem::exists(side)) return miss("absent");
  CacheEntry entry;
  try {
    const auto j = nlohmann::json::parse(read_file(side));
    entry.table = j.at("table").get<std::string>();
    entry.params = j.at("params").get<std::string>();
    entry.version = j.at("version").get<int>();
    entry.payload = j.at("payload").get<std::string>();
    entry.sha256 = j.at("sha256").get<std::string>();
  } catch (const std::exception& e) {
    return miss(std::string("unreadable sidecar: ") + e.what());
  }
  if (entry.version != kVersion) return miss("version " + std::to_string(entry.version));
  if (entry.table != table || entry.params != params) return miss("key collision");
  std::string payload;
  try {
    payload = read_file(dir_ / entry.payload);
  } catch (const std::exception&) {
    return miss("payload missing");
  }
  if (sha256_hex(payload) != entry.sha256) return miss("digest mismatch");
  return payload;
}

void Cache::store(std::string_view table, std::string_view params, std::string_view payload) const {
  const auto data = payload_path(table, params);
  nlohmann::json j;
  j["table"] = table;
  j["params"] = params;
  j["version"] = kVersion;
  j["payload"] = data.filename().string();
  j["sha256"] = sha256_hex(payload);
  write_file_atomic(data, payload);
  write_file_atomic(sidecar_path(table, params), j.dump(2) + "\n");
}

}  // namespace curling
