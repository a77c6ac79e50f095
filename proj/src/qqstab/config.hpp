/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qqstab::cli {

/// Configuration failure, tagged for error-code mapping.
struct ConfigError : std::runtime_error {
  enum class Kind { BadKey, Parse, Io };
  ConfigError(Kind k, const std::string& msg)
      : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

/// Experiment configuration: a registry of known `key = value` settings with
/// defaults. Sources, in increasing precedence: defaults, config file,
/// explicit set() calls (the CLI applies flags last, so flags win).
class ExperimentConfig {
 public:
  struct KeySpec {
    const char* name;
    const char* def;
    const char* help;
  };

  /// The full key registry (single source of truth; the CLI generates one
  /// flag per key from this).
  static std::span<const KeySpec> keys();

  /// Sets a known key; throws ConfigError{BadKey} otherwise.
  void set(const std::string& key, const std::string& value);

  /// Loads `key = value` lines; blank lines and lines starting with '#' are
  /// skipped. Throws ConfigError{Io} on unreadable files, {Parse} on
  /// malformed lines, {BadKey} on unknown keys.
  void load_file(const std::string& path);

  /// Raw value with the default applied.
  std::string str(const std::string& key) const;

  double real(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  std::uint64_t uinteger(const std::string& key) const;
  bool flag(const std::string& key) const;
  /// Comma-separated list of reals; an empty value yields an empty list.
  std::vector<double> real_list(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace qqstab::cli
