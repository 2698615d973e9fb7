#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace infodemic {

/**
 * @brief Key=value configuration text: one assignment per line, full-line
 * `#` comments, blank lines ignored, values split at the first `=`.
 *
 * Keys carry their unit where one exists (beta_i_per_day, step_days) so a
 * rate is never mistaken for a period. Duplicate keys are an error; lookups
 * report the source file and line on failure.
 */
class Config {
 public:
  struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
  };

  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text, const std::string& origin = "<inline>");

  bool has(const std::string& key) const;
  const std::vector<Entry>& entries() const { return entries_; }
  const std::string& origin() const { return origin_; }

  /// Missing key throws std::invalid_argument naming the origin.
  const std::string& get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  /// Full-string numeric parse; trailing junk is an error.
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;

  /// Rejects any key outside `allowed`, listing the valid keys; catches
  /// typos before they silently fall back to defaults.
  void require_keys_in(const std::vector<std::string>& allowed) const;

 private:
  const Entry* find(const std::string& key) const;

  std::vector<Entry> entries_;
  std::string origin_;
};

}  // namespace infodemic
