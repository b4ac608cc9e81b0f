#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace curling {

struct CacheEntry {
  std::string table;
  std::string params;
  int version = 0;
  std::string payload;  // payload file name, relative to the cache directory
  std::string sha256;   // digest of the payload bytes
};

/// Computed outputs stored as <stem>.dat with a <stem>.json sidecar. The stem
/// is the table name plus a digest of the parameter string, so every distinct
/// parameter tuple gets its own slot.
class Cache {
 public:
  static constexpr int kVersion = 1;

  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Payload if the sidecar matches table, params and version and the digest
  /// checks out. Anything else is a miss; `why` gets the reason when given.
  std::optional<std::string> load(std::string_view table, std::string_view params,
                                  std::string* why = nullptr) const;
  void store(std::string_view table, std::string_view params, std::string_view payload) const;

  std::filesystem::path payload_path(std::string_view table, std::string_view params) const;
  std::filesystem::path sidecar_path(std::string_view table, std::string_view params) const;

 private:
  std::string stem(std::string_view table, std::string_view params) const;
  std::filesystem::path dir_;
};

}  // namespace curling
