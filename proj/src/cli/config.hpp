#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rml::cli {

// Flat key=value experiment configuration. One config describes one
// experiment; the serialized form (sorted keys, output-path and worker-count
// keys excluded) is hashed into every output file so a run can always be
// traced back to exactly what produced it.
class Config {
public:
  Config() = default;

  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  double get_double(const std::string& key) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  std::vector<double> get_grid(const std::string& key) const;  // comma list
  std::vector<std::size_t> get_size_grid(const std::string& key) const;

  // Throws ParameterError naming the first key outside `allowed`.
  void restrict_keys(const std::vector<std::string>& allowed) const;

  std::string canonical() const;      // sorted key=value lines, hash input
  std::string hash_hex() const;       // FNV-1a 64 of canonical()

  const std::map<std::string, std::string>& entries() const { return kv_; }

private:
  std::map<std::string, std::string> kv_;
};

std::uint64_t fnv1a64(const std::string& text);

}  // namespace rml::cli
