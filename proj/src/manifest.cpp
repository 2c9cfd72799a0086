#include "vcs/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vcs {

void RunManifest::set(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void RunManifest::set(const std::string& key, std::uint64_t value) {
  entries_.emplace_back(key, std::to_string(value));
}

void RunManifest::set(const std::string& key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", value);
  entries_.emplace_back(key, buf);
}

std::string RunManifest::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries_) {
    out << key << '=' << value << '\n';
  }
  return out.str();
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for digest");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace vcs
