/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Command-line front end for the qqstab shared library. Talks to the
 * library exclusively through its C interface; every configuration key is
 * exposed both as a --flag and through --config files (flags win).
 */
#include <cstdio>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qqstab.h"

namespace {

struct SubState {
  CLI::App* sub = nullptr;
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> opts;
  CLI::Option* oracle = nullptr;
};

int run_subcommand(const SubState& st) {
  qq_config* raw = nullptr;
  if (qq_config_new(&raw) != QQ_OK || raw == nullptr) {
    std::fprintf(stderr, "error: could not allocate configuration\n");
    return 2;
  }
  std::unique_ptr<qq_config, decltype(&qq_config_free)> cfg(raw,
                                                            &qq_config_free);

  if (!st.config_path.empty()) {
    const qq_status s = qq_config_load(cfg.get(), st.config_path.c_str());
    if (s != QQ_OK) {
      std::fprintf(stderr, "error: %s: %s\n", qq_status_str(s),
                   st.config_path.c_str());
      return 2;
    }
  }
  for (const auto& [name, opt] : st.opts) {
    if (opt->count() > 0) {
      const qq_status s =
          qq_config_set(cfg.get(), name.c_str(), st.values.at(name).c_str());
      if (s != QQ_OK) {
        std::fprintf(stderr, "error: --%s: %s\n", name.c_str(),
                     qq_status_str(s));
        return 2;
      }
    }
  }
  if (st.oracle != nullptr && st.oracle->count() > 0) {
    qq_config_set(cfg.get(), "oracle", "1");
  }

  int exit_code = 0;
  char summary[2048] = {0};
  const qq_status s = qq_run(cfg.get(), st.sub->get_name().c_str(), &exit_code,
                             summary, sizeof summary);
  if (s != QQ_OK) {
    std::fprintf(stderr, "error: %s\n", qq_status_str(s));
    return 2;
  }
  std::printf("%s\n", summary);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Experiments on the quadratic-quartic functional equation over random "
      "normed spaces: residual sweeps, limit extraction, stability bounds, "
      "axiom checks, and t-norm tail folds. Reports are written as CSV files "
      "to the configured output directory."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qq_version()));

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"check-solution",
       "sweep the functional-equation residuals of a test function"},
      {"recover",
       "extract the quadratic/quartic limits and recover the coefficients"},
      {"verify-bounds",
       "verify the stability lower bounds for the quadratic, quartic, and "
       "combined parts"},
      {"axioms", "fuzz the random-normed-space axioms on a fixture space"},
      {"tnorm-tail", "fold truncated t-norm tails and test convergence"},
  };

  std::vector<SubState> states(commands.size());
  const size_t key_count = qq_config_key_count();
  for (size_t i = 0; i < commands.size(); ++i) {
    SubState& st = states[i];
    st.sub = app.add_subcommand(commands[i].first, commands[i].second);
    st.sub->add_option("--config", st.config_path,
                       "configuration file with 'key = value' lines");
    for (size_t k = 0; k < key_count; ++k) {
      const char* name = qq_config_key_name(k);
      const char* help = qq_config_key_help(k);
      if (std::strcmp(name, "oracle") == 0) {
        st.oracle = st.sub->add_flag(std::string("--oracle"));
        st.oracle->description(help);
      } else {
        st.opts[name] = st.sub->add_option("--" + std::string(name),
                                           st.values[name], std::string(help));
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  for (const SubState& st : states) {
    if (st.sub->parsed()) return run_subcommand(st);
  }
  return 2;
}
