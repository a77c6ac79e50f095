/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace qqstab::cli {

namespace {

constexpr ExperimentConfig::KeySpec kKeys[] = {
    {"dimension", "1", "domain dimension d >= 1"},
    {"a", "0", "quartic coefficient of the test function"},
    {"b", "0", "quadratic coefficient of the test function"},
    {"delta", "0", "amplitude of the deterministic perturbation (>= 0)"},
    {"noise_seed", "1", "seed for the deterministic perturbation"},
    {"family_count", "0",
     "number of seeded (a,b) families to sweep; 0 uses a,b directly"},
    {"family_seed", "42", "seed for drawing (a,b) families"},
    {"a_min", "-10", "lower bound for drawn quartic coefficients"},
    {"a_max", "10", "upper bound for drawn quartic coefficients"},
    {"b_min", "-10", "lower bound for drawn quadratic coefficients"},
    {"b_max", "10", "upper bound for drawn quadratic coefficients"},
    {"stencil", "-4,-2,-1,-0.5,0,0.5,1,2,4",
     "comma-separated coordinate values for residual sweeps"},
    {"x_min", "0.5", "smallest base-point coordinate"},
    {"x_max", "4", "largest base-point coordinate"},
    {"x_count", "5", "number of base points"},
    {"x_scale", "linear", "base-point spacing: linear | log"},
    {"t_min", "0.1", "smallest distribution argument t"},
    {"t_max", "10", "largest distribution argument t"},
    {"t_count", "5", "number of t values"},
    {"t_scale", "log", "t spacing: linear | log"},
    {"depth", "50", "fold depth for lower-bound evaluation"},
    {"n_max", "12", "doubling levels for limit extraction (2..20)"},
    {"tol", "1e-6", "convergence / residual tolerance (> 0)"},
    {"guard_limit", "1e12", "overflow guard on scaled coordinates (> 0)"},
    {"tnorm", "minimum", "t-norm: minimum | product | lukasiewicz"},
    {"combiner", "tnorm", "bound combiner: tnorm | clamped-sum"},
    {"mu_model", "auto", "distribution model for points: auto | step | induced"},
    {"rho", "step", "perturbation profile: step | control | eps0"},
    {"rho_c", "0.4", "defect level c for the step profile (>= 0)"},
    {"rho_theta", "1", "scale theta for the control profile (>= 0)"},
    {"rho_p", "1", "exponent p for the control profile (>= 0)"},
    {"space", "induced",
     "axiom-check fixture: induced | broken-rn2 | const-eps0"},
    {"samples", "10000", "randomized samples for the axiom check (>= 1)"},
    {"seed", "1", "seed for the axiom-check sampler"},
    {"tail_kind", "geometric",
     "tail term sequence: geometric | harmonic | ones"},
    {"tail_tnorm", "lukasiewicz", "t-norm used for tail folds"},
    {"tail_starts", "1,3,5", "comma-separated shifted-tail start indices"},
    {"tail_depth", "64", "number of terms folded per tail (>= 1)"},
    {"tail_threshold", "1e-6",
     "defect block-sum threshold for tail convergence"},
    {"out", "", "output directory (falls back to QQSTAB_OUT_DIR, then '.')"},
    {"oracle", "0", "append exact-arithmetic cross-check columns (0|1)"},
};

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

const ExperimentConfig::KeySpec* find_key(const std::string& key) {
  for (const auto& k : kKeys) {
    if (key == k.name) return &k;
  }
  return nullptr;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const char* wanted) {
  throw ConfigError(ConfigError::Kind::Parse, "key '" + key + "': value '" +
                                                  value + "' is not " + wanted);
}

}  // namespace

std::span<const ExperimentConfig::KeySpec> ExperimentConfig::keys() {
  return kKeys;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (find_key(key) == nullptr) {
    throw ConfigError(ConfigError::Kind::BadKey, "unknown key '" + key + "'");
  }
  values_[key] = trim(value);
}

void ExperimentConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(ConfigError::Kind::Io,
                      "cannot open config file '" + path + "'");
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(ConfigError::Kind::Parse,
                        path + ":" + std::to_string(lineno) +
                            ": expected 'key = value', got '" + t + "'");
    }
    set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
}

std::string ExperimentConfig::str(const std::string& key) const {
  auto it = values_.find(key);
  if (it != values_.end()) return it->second;
  const KeySpec* spec = find_key(key);
  if (spec == nullptr) {
    throw ConfigError(ConfigError::Kind::BadKey, "unknown key '" + key + "'");
  }
  return spec->def;
}

double ExperimentConfig::real(const std::string& key) const {
  std::string v = str(key);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    bad_value(key, v, "a real number");
  }
  return out;
}

std::int64_t ExperimentConfig::integer(const std::string& key) const {
  std::string v = str(key);
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    bad_value(key, v, "an integer");
  }
  return out;
}

std::uint64_t ExperimentConfig::uinteger(const std::string& key) const {
  std::string v = str(key);
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    bad_value(key, v, "a non-negative integer");
  }
  return out;
}

bool ExperimentConfig::flag(const std::string& key) const {
  std::string v = str(key);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  bad_value(key, v, "a boolean (0|1|true|false|yes|no|on|off)");
}

std::vector<double> ExperimentConfig::real_list(const std::string& key) const {
  std::string v = str(key);
  std::vector<double> out;
  if (trim(v).empty()) return out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    auto comma = v.find(',', pos);
    std::string item =
        trim(v.substr(pos, comma == std::string::npos ? comma : comma - pos));
    double d = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
      bad_value(key, v, "a comma-separated list of reals");
    }
    out.push_back(d);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace qqstab::cli
