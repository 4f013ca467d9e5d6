#include "cli/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "common/errors.hpp"

namespace rml::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(lineno) +
                           ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParameterError("config line " + std::to_string(lineno) +
                           ": empty key");
    }
    cfg.set(key, value);
  }
  return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

bool Config::has(const std::string& key) const { return kv_.count(key) != 0; }

std::string Config::get_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) {
    throw ParameterError("missing required config key '" + key + "'");
  }
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParameterError("config key '" + key + "' is not a number: '" +
                         it->second + "'");
  }
}

double Config::get_double(const std::string& key) const {
  get_string(key);  // required
  return get_double(key, 0.0);
}

std::size_t Config::get_size(const std::string& key,
                             std::size_t fallback) const {
  const double v = get_double(key, static_cast<double>(fallback));
  if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw ParameterError("config key '" + key + "' must be a nonnegative integer");
  }
  return static_cast<std::size_t>(v);
}

std::uint64_t Config::get_u64(const std::string& key,
                              std::uint64_t fallback) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return fallback;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw ParameterError("config key '" + key + "' is not an integer: '" +
                         it->second + "'");
  }
}

std::vector<double> Config::get_grid(const std::string& key) const {
  const std::string raw = get_string(key);
  std::vector<double> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw ParameterError("config key '" + key + "' is empty");
  return out;
}

std::vector<std::size_t> Config::get_size_grid(const std::string& key) const {
  std::vector<std::size_t> out;
  for (double v : get_grid(key)) {
    if (v < 1.0) throw ParameterError("config key '" + key + "' needs positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void Config::restrict_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [key, value] : kv_) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParameterError("unknown config key '" + key + "'");
    }
  }
}

std::string Config::canonical() const {
  std::string out;
  for (const auto& [key, value] : kv_) {
    if (key == "out" || key == "workers") continue;
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

std::string Config::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical())));
  return buf;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace rml::cli
