/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "qqstab/config.hpp"

using qqstab::cli::ConfigError;
using qqstab::cli::ExperimentConfig;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("qqstab_config_test_" + std::to_string(::getpid()) + ".cfg");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("defaults cover every registered key") {
  const ExperimentConfig cfg;
  CHECK(cfg.real("tol") == 1e-6);
  CHECK(cfg.str("tnorm") == "minimum");
  CHECK(cfg.str("mu_model") == "auto");
  CHECK(cfg.uinteger("depth") == 50);
  CHECK(cfg.uinteger("n_max") == 12);
  CHECK(cfg.uinteger("dimension") == 1);
  CHECK(cfg.integer("family_count") == 0);
  CHECK_FALSE(cfg.flag("oracle"));
  CHECK(cfg.str("out").empty());
  const auto stencil = cfg.real_list("stencil");
  CHECK(stencil.size() == 9);
  CHECK(stencil.front() == -4.0);
  CHECK(stencil.back() == 4.0);
  // Every registered key must produce a readable raw value without throwing.
  for (const auto& spec : ExperimentConfig::keys()) {
    CHECK_NOTHROW(cfg.str(spec.name));
  }
  CHECK(ExperimentConfig::keys().size() >= 40);
}

TEST_CASE("set overrides defaults and rejects unknown keys") {
  ExperimentConfig cfg;
  cfg.set("tol", "0.5");
  CHECK(cfg.real("tol") == 0.5);
  cfg.set("oracle", "1");
  CHECK(cfg.flag("oracle"));
  cfg.set("oracle", "false");
  CHECK_FALSE(cfg.flag("oracle"));
  try {
    cfg.set("no_such_key", "1");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::BadKey);
  }
}

TEST_CASE("typed accessors reject malformed values") {
  ExperimentConfig cfg;
  cfg.set("tol", "not-a-number");
  try {
    (void)cfg.real("tol");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::Parse);
  }
  cfg.set("depth", "12abc");  // trailing garbage must not be accepted
  CHECK_THROWS_AS((void)cfg.uinteger("depth"), ConfigError);
  cfg.set("family_count", "");
  CHECK_THROWS_AS((void)cfg.integer("family_count"), ConfigError);
  cfg.set("stencil", "1,two,3");
  CHECK_THROWS_AS((void)cfg.real_list("stencil"), ConfigError);
}

TEST_CASE("real_list handles empty and spaced input") {
  ExperimentConfig cfg;
  cfg.set("tail_starts", "");
  CHECK(cfg.real_list("tail_starts").empty());
  cfg.set("tail_starts", " 1 , 2.5 ,3 ");
  const auto xs = cfg.real_list("tail_starts");
  REQUIRE(xs.size() == 3);
  CHECK(xs[1] == 2.5);
}

TEST_CASE("config files load with comments and blank lines") {
  const TempFile file(
      "# experiment setup\n"
      "\n"
      "tol = 1e-3\n"
      "tnorm = product\n"
      "  depth=7\n"
      "stencil = -1, 0, 1\n");
  ExperimentConfig cfg;
  cfg.load_file(file.path.string());
  CHECK(cfg.real("tol") == 1e-3);
  CHECK(cfg.str("tnorm") == "product");
  CHECK(cfg.uinteger("depth") == 7);
  CHECK(cfg.real_list("stencil").size() == 3);
  // Untouched keys keep their defaults.
  CHECK(cfg.uinteger("n_max") == 12);
}

TEST_CASE("malformed config lines report the location") {
  const TempFile file("tol = 1e-3\nthis line has no equals\n");
  ExperimentConfig cfg;
  try {
    cfg.load_file(file.path.string());
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::Parse);
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("unknown keys in config files are rejected") {
  const TempFile file("mystery = 1\n");
  ExperimentConfig cfg;
  try {
    cfg.load_file(file.path.string());
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::BadKey);
  }
}

TEST_CASE("missing config files are an io error") {
  ExperimentConfig cfg;
  try {
    cfg.load_file("/nonexistent/qqstab.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.kind == ConfigError::Kind::Io);
  }
}
