#include "infodemic/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace infodemic {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::parse_string(const std::string& text, const std::string& origin) {
  Config config;
  config.origin_ = origin;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(origin + " line " + std::to_string(line_no) +
                                  ": expected key=value, got \"" + stripped + "\"");
    }
    Entry entry;
    entry.key = trim(stripped.substr(0, eq));
    entry.value = trim(stripped.substr(eq + 1));
    entry.line = line_no;
    if (entry.key.empty()) {
      throw std::invalid_argument(origin + " line " + std::to_string(line_no) + ": empty key");
    }
    if (config.find(entry.key) != nullptr) {
      throw std::invalid_argument(origin + " line " + std::to_string(line_no) +
                                  ": duplicate key \"" + entry.key + "\"");
    }
    config.entries_.push_back(std::move(entry));
  }
  return config;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_string(text.str(), path);
}

const Config::Entry* Config::find(const std::string& key) const {
  for (const Entry& entry : entries_) {
    if (entry.key == key) return &entry;
  }
  return nullptr;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

const std::string& Config::get_string(const std::string& key) const {
  const Entry* entry = find(key);
  if (entry == nullptr) {
    throw std::invalid_argument(origin_ + ": missing required key \"" + key + "\"");
  }
  return entry->value;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  const Entry* entry = find(key);
  return entry != nullptr ? entry->value : fallback;
}

double Config::get_double(const std::string& key) const {
  const Entry* entry = find(key);
  if (entry == nullptr) {
    throw std::invalid_argument(origin_ + ": missing required key \"" + key + "\"");
  }
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(entry->value, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != entry->value.size() || entry->value.empty()) {
    throw std::invalid_argument(origin_ + " line " + std::to_string(entry->line) + ": key \"" +
                                key + "\" has non-numeric value \"" + entry->value + "\"");
  }
  return value;
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::size_t Config::get_size(const std::string& key) const {
  const Entry* entry = find(key);
  if (entry == nullptr) {
    throw std::invalid_argument(origin_ + ": missing required key \"" + key + "\"");
  }
  std::size_t consumed = 0;
  long long value = 0;
  try {
    value = std::stoll(entry->value, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != entry->value.size() || entry->value.empty() || value < 0) {
    throw std::invalid_argument(origin_ + " line " + std::to_string(entry->line) + ": key \"" +
                                key + "\" needs a non-negative integer, got \"" + entry->value +
                                "\"");
  }
  return static_cast<std::size_t>(value);
}

std::size_t Config::get_size(const std::string& key, std::size_t fallback) const {
  return has(key) ? get_size(key) : fallback;
}

void Config::require_keys_in(const std::vector<std::string>& allowed) const {
  for (const Entry& entry : entries_) {
    if (std::find(allowed.begin(), allowed.end(), entry.key) == allowed.end()) {
      std::string known;
      for (const std::string& key : allowed) {
        if (!known.empty()) known += ", ";
        known += key;
      }
      throw std::invalid_argument(origin_ + " line " + std::to_string(entry.line) +
                                  ": unknown key \"" + entry.key + "\" (known keys: " + known +
                                  ")");
    }
  }
}

}  // namespace infodemic
