#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vcs {

// Reproducibility sidecar written next to every trained embedding: resolved
// configuration, input digest, seed, timings, structure sizes. Flat
// `key=value` lines in insertion order.
class RunManifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, std::uint64_t value);
  void set(const std::string& key, double value);

  std::string serialize() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// FNV-1a over the file bytes, rendered as 16 hex digits. Collision-weak but
// stable; this is bookkeeping, not security.
std::string file_digest(const std::string& path);

}  // namespace vcs
