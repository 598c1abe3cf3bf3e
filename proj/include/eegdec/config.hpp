#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eegdec/common.hpp"

namespace eegdec::config {

// Flat "section.key = value" text configuration; '#' starts a comment.
class ConfigMap {
 public:
  ConfigMap() = default;

  static ConfigMap parse(const std::string& text);
  static ConfigMap load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  long get_int(const std::string& key, long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

  // key = value lines, sorted; suitable for run manifests
  std::string to_text() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace eegdec::config
