#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobforge/error.hpp"

namespace frobforge::cli {

enum class Format { json, table };

/// Settings shared by every command. The config file holds `key = value`
/// lines with the same names; `#` starts a comment.
struct SessionConfig {
  std::vector<unsigned> e_list{1, 2, 3};
  std::optional<std::size_t> max_i;  // unset: dim R + 1
  std::uint64_t pushforward_bound = 256;
  std::string cache_dir;
  Format format = Format::json;
  std::uint64_t seed = 20240601;
  bool parallel = false;
  std::size_t random_complexes = 10;  // acyclicity harness size in corpus runs
};

/// Thrown for bad flags, config lines and command arguments (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::uint64_t parse_uint(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  if (t.empty() || t.size() > 18 || t.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return std::stoull(t);
}

inline std::vector<unsigned> parse_e_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = parse_uint(item, "e list");
    if (v < 1 || v > 30) throw UsageError("e list: entries must lie in 1..30, got " + trim(item));
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw UsageError("e list must not be empty");
  return out;
}

inline Format parse_format(const std::string& text) {
  std::string t = trim(text);
  if (t == "json") return Format::json;
  if (t == "table") return Format::table;
  throw UsageError("format must be 'json' or 'table', got '" + text + "'");
}

inline void apply_setting(SessionConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "e_list") {
    cfg.e_list = parse_e_list(value);
  } else if (key == "max_i") {
    if (trim(value) == "auto") {
      cfg.max_i.reset();
    } else {
      cfg.max_i = parse_uint(value, "max_i");
    }
  } else if (key == "pushforward_bound") {
    cfg.pushforward_bound = parse_uint(value, "pushforward_bound");
  } else if (key == "cache_dir") {
    cfg.cache_dir = trim(value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "seed") {
    cfg.seed = parse_uint(value, "seed");
  } else if (key == "parallel") {
    std::string v = trim(value);
    if (v != "true" && v != "false") throw UsageError("parallel must be true or false");
    cfg.parallel = v == "true";
  } else if (key == "random_complexes") {
    cfg.random_complexes = parse_uint(value, "random_complexes");
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

inline void load_config(SessionConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const UsageError& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

}  // namespace frobforge::cli
