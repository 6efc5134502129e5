#pragma once

// Flat key-value config files with [section] headers: keys become
// "section.key", '#' starts a comment, values keep interior whitespace.
// Command-line flags override file values through the pick_* helpers.

#include <map>
#include <string>
#include <vector>

namespace resind_cli {

class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  void load_file(const std::string& path);  // throws std::runtime_error
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;

  // comma-separated doubles; empty or missing -> fallback
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  const std::map<std::string, std::string>& entries() const { return map_; }

 private:
  std::map<std::string, std::string> map_;
};

std::vector<double> parse_double_list(const std::string& s);
std::vector<std::string> split_list(const std::string& s, char sep = ',');

}  // namespace resind_cli
