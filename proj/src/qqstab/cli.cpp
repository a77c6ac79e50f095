/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "qqstab/csvio.hpp"
#include "qqstab/funceq.hpp"
#include "qqstab/hyers.hpp"
#include "qqstab/oracle.hpp"
#include "qqstab/rng.hpp"
#include "qqstab/rnspace.hpp"
#include "qqstab/tnorms.hpp"
#include "qqstab/vec.hpp"

namespace qqstab::cli {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void invalid(const std::string& msg) {
  throw std::invalid_argument(msg);
}

double positive_real(const ExperimentConfig& cfg, const char* key) {
  double v = cfg.real(key);
  if (!(v > 0.0)) invalid(std::string(key) + " must be > 0");
  return v;
}

double nonneg_real(const ExperimentConfig& cfg, const char* key) {
  double v = cfg.real(key);
  if (!(v >= 0.0)) invalid(std::string(key) + " must be >= 0");
  return v;
}

std::size_t dimension_of(const ExperimentConfig& cfg) {
  auto d = cfg.uinteger("dimension");
  if (d < 1) invalid("dimension must be >= 1");
  return static_cast<std::size_t>(d);
}

std::uint64_t levels_of(const ExperimentConfig& cfg) {
  auto n = cfg.uinteger("n_max");
  if (n < 2 || n > 20) invalid("n_max must be in [2, 20]");
  return n;
}

funceq::TestFunction single_fn(const ExperimentConfig& cfg, std::size_t dim) {
  return {cfg.real("a"), cfg.real("b"), nonneg_real(cfg, "delta"),
          cfg.uinteger("noise_seed"), dim};
}

hyers::PerturbationProfile profile_of(const ExperimentConfig& cfg) {
  std::string kind = cfg.str("rho");
  if (kind == "step") {
    return hyers::PerturbationProfile::step_defect(nonneg_real(cfg, "rho_c"));
  }
  if (kind == "control") {
    return hyers::PerturbationProfile::control_type(
        nonneg_real(cfg, "rho_theta"), nonneg_real(cfg, "rho_p"));
  }
  if (kind == "eps0") return hyers::PerturbationProfile::step_defect(0.0);
  invalid("rho must be step | control | eps0");
}

std::vector<double> make_grid(double lo, double hi, std::uint64_t count,
                              const std::string& scale, const char* what) {
  if (count < 1) invalid(std::string(what) + "_count must be >= 1");
  std::vector<double> grid;
  grid.reserve(count);
  if (count == 1) {
    grid.push_back(lo);
    return grid;
  }
  if (!(hi > lo)) {
    invalid(std::string(what) + " range is degenerate (max must exceed min)");
  }
  if (scale == "linear") {
    for (std::uint64_t i = 0; i < count; ++i) {
      grid.push_back(i + 1 == count
                         ? hi
                         : lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
    }
  } else if (scale == "log") {
    if (!(lo > 0.0)) invalid(std::string(what) + "_min must be > 0 on a log scale");
    const double ratio = hi / lo;
    for (std::uint64_t i = 0; i < count; ++i) {
      grid.push_back(i + 1 == count
                         ? hi
                         : lo * std::pow(ratio, static_cast<double>(i) /
                                                    static_cast<double>(count - 1)));
    }
  } else {
    invalid(std::string(what) + "_scale must be linear | log");
  }
  return grid;
}

std::vector<double> x_grid(const ExperimentConfig& cfg) {
  return make_grid(cfg.real("x_min"), cfg.real("x_max"),
                   cfg.uinteger("x_count"), cfg.str("x_scale"), "x");
}

std::vector<double> t_grid(const ExperimentConfig& cfg) {
  auto grid = make_grid(cfg.real("t_min"), cfg.real("t_max"),
                        cfg.uinteger("t_count"), cfg.str("t_scale"), "t");
  for (double t : grid) {
    if (!(t > 0.0)) invalid("t grid must be strictly positive");
  }
  return grid;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError(ConfigError::Kind::Io,
                      "cannot write report file '" + path.string() + "'");
  }
  return out;
}

bool oracle_requested(const ExperimentConfig& cfg, std::size_t dim) {
  bool want = cfg.flag("oracle");
  if (want && dim != 1) invalid("oracle cross-checks require dimension = 1");
  return want;
}

/// max(1, |f|) over every point any of the five checks evaluates, so residual
/// tolerances scale with the data that produced them.
double eval_scale(const funceq::Evaluable& f, const Vector& X, const Vector& Y) {
  const Vector pts[] = {
      add(scaled(2.0, X), Y),  sub(scaled(2.0, X), Y),  add(X, Y),
      sub(X, Y),               scaled(2.0, X),          X,
      Y,                       scaled(2.0, add(X, Y)),  scaled(2.0, sub(X, Y)),
      scaled(2.0, Y),          scaled(4.0, X),          add(X, scaled(2.0, Y)),
      sub(X, scaled(2.0, Y)),  add(scaled(2.0, X), scaled(4.0, Y)),
      sub(scaled(2.0, X), scaled(4.0, Y)),              scaled(-1.0, X),
  };
  double m = 1.0;
  for (const auto& p : pts) m = std::max(m, std::fabs(f(p)));
  return m;
}

std::string arrow(std::initializer_list<fs::path> paths) {
  std::string s = " ->";
  for (const auto& p : paths) s += " " + p.string();
  return s;
}

}  // namespace

std::string output_dir(const ExperimentConfig& cfg) {
  std::string dir = cfg.str("out");
  if (dir.empty()) {
    const char* env = std::getenv("QQSTAB_OUT_DIR");
    if (env != nullptr && *env != '\0') dir = env;
  }
  if (dir.empty()) dir = ".";
  fs::create_directories(dir);
  return dir;
}

CommandResult run_check_solution(const ExperimentConfig& cfg) {
  const std::size_t dim = dimension_of(cfg);
  const double tol = positive_real(cfg, "tol");
  const std::vector<double> stencil = cfg.real_list("stencil");
  if (stencil.empty()) invalid("stencil must list at least one coordinate");
  const bool oracle = oracle_requested(cfg, dim);

  std::vector<funceq::TestFunction> fns;
  const std::uint64_t count = cfg.uinteger("family_count");
  if (count == 0) {
    fns.push_back(single_fn(cfg, dim));
  } else {
    const double a_min = cfg.real("a_min"), a_max = cfg.real("a_max");
    const double b_min = cfg.real("b_min"), b_max = cfg.real("b_max");
    if (!(a_max >= a_min) || !(b_max >= b_min)) {
      invalid("coefficient ranges must satisfy min <= max");
    }
    const double delta = nonneg_real(cfg, "delta");
    const std::uint64_t fseed = cfg.uinteger("family_seed");
    const std::uint64_t nseed = cfg.uinteger("noise_seed");
    for (std::uint64_t k = 0; k < count; ++k) {
      std::uint64_t st = rng::mix(fseed + k);
      const double a = rng::uniform(st, a_min, a_max);
      const double b = rng::uniform(st, b_min, b_max);
      fns.push_back({a, b, delta, nseed + k, dim});
    }
  }

  const fs::path path = fs::path(output_dir(cfg)) / "check_solution.csv";
  std::ofstream out = open_out(path);
  std::vector<std::string> hdr{"family",
                               "a",
                               "b",
                               "delta",
                               "x",
                               "y",
                               "residual_qq",
                               "residual_quadratic_g",
                               "residual_quartic_h",
                               "doubling",
                               "even",
                               "scale",
                               "pass"};
  if (oracle) hdr.emplace_back("oracle_dev");
  csv::write_row(out, hdr);

  std::uint64_t violations = 0;
  std::uint64_t cells = 0;
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const auto& f = fns[k];
    const auto fe = funceq::as_evaluable(f);
    const auto g = funceq::part_g(fe);
    const auto h = funceq::part_h(fe);
    for (double xs : stencil) {
      for (double ys : stencil) {
        const Vector X = axis_vector(dim, xs);
        const Vector Y = axis_vector(dim, ys);
        const double r_qq = funceq::residual_qq(fe, X, Y);
        const double r_g = funceq::residual_quadratic(g, X, Y);
        const double r_h = funceq::residual_quartic(h, X, Y);
        const double dbl = funceq::check_doubling(fe, X);
        const double evn = funceq::check_even(fe, X);
        const double sc = eval_scale(fe, X, Y);
        const bool pass = std::fabs(r_qq) <= tol * sc &&
                          std::fabs(r_g) <= 10.0 * tol * sc &&
                          std::fabs(r_h) <= 10.0 * tol * sc &&
                          std::fabs(dbl) <= 10.0 * tol * sc &&
                          std::fabs(evn) <= 10.0 * tol * sc;
        if (!pass) ++violations;
        ++cells;
        std::vector<std::string> row{
            csv::fmt(static_cast<std::uint64_t>(k)),
            csv::fmt(f.a),
            csv::fmt(f.b),
            csv::fmt(f.delta),
            csv::fmt(xs),
            csv::fmt(ys),
            csv::fmt(r_qq),
            csv::fmt(r_g),
            csv::fmt(r_h),
            csv::fmt(dbl),
            csv::fmt(evn),
            csv::fmt(sc),
            csv::fmt(pass)};
        if (oracle) {
          row.push_back(csv::fmt(oracle::cross_check_residual(f, xs, ys)));
        }
        csv::write_row(out, row);
      }
    }
  }

  CommandResult res;
  res.exit_code = violations == 0 ? 0 : 1;
  res.summary = "check-solution: " + std::to_string(fns.size()) +
                " function(s), " + std::to_string(cells) + " cell(s), " +
                std::to_string(violations) + " violation(s)" + arrow({path});
  return res;
}

CommandResult run_recover(const ExperimentConfig& cfg) {
  const std::size_t dim = dimension_of(cfg);
  const double tol = positive_real(cfg, "tol");
  const double guard = positive_real(cfg, "guard_limit");
  const std::uint64_t n_max = levels_of(cfg);
  const std::vector<double> xs_grid = x_grid(cfg);
  const funceq::TestFunction f = single_fn(cfg, dim);
  const auto fe = funceq::as_evaluable(f);
  const auto g = funceq::part_g(fe);
  const auto h = funceq::part_h(fe);
  const bool oracle = oracle_requested(cfg, dim);

  const fs::path dir = output_dir(cfg);
  const fs::path path = dir / "recover.csv";
  const fs::path trace_path = dir / "recover.trace.csv";
  std::ofstream out = open_out(path);
  std::ofstream trace = open_out(trace_path);

  std::vector<std::string> hdr{"x",          "q1",           "q2",
                               "a_hat",      "b_hat",        "q1_converged",
                               "q2_converged", "truncated",  "ratio_q1",
                               "ratio_q2"};
  if (oracle) {
    hdr.emplace_back("oracle_dev_q1");
    hdr.emplace_back("oracle_dev_q2");
  }
  csv::write_row(out, hdr);
  csv::write_row(trace, {"x", "part", "n", "value", "delta"});

  bool any_truncated = false;
  bool all_converged = true;
  std::uint64_t converged_points = 0;
  for (double xs : xs_grid) {
    const Vector X = axis_vector(dim, xs);
    const auto lg = hyers::quadratic_limit(g, X, n_max, tol, guard);
    const auto lh = hyers::quartic_limit(h, X, n_max, tol, guard);
    for (const auto& lv : lg.trace.levels) {
      csv::write_row(trace, {csv::fmt(xs), "quadratic", csv::fmt(lv.n),
                             csv::fmt(lv.value), csv::fmt(lv.delta)});
    }
    for (const auto& lv : lh.trace.levels) {
      csv::write_row(trace, {csv::fmt(xs), "quartic", csv::fmt(lv.n),
                             csv::fmt(lv.value), csv::fmt(lv.delta)});
    }
    const double x2 = xs * xs;
    const double a_hat = lh.value / (12.0 * x2 * x2);
    const double b_hat = -lg.value / (12.0 * x2);
    const bool trunc = lg.trace.truncated || lh.trace.truncated;
    const bool conv = lg.trace.converged && lh.trace.converged;
    any_truncated = any_truncated || trunc;
    all_converged = all_converged && conv;
    if (conv) ++converged_points;
    std::vector<std::string> row{csv::fmt(xs),
                                 csv::fmt(lg.value),
                                 csv::fmt(lh.value),
                                 csv::fmt(a_hat),
                                 csv::fmt(b_hat),
                                 csv::fmt(lg.trace.converged),
                                 csv::fmt(lh.trace.converged),
                                 csv::fmt(trunc),
                                 csv::fmt(lg.trace.estimated_ratio),
                                 csv::fmt(lh.trace.estimated_ratio)};
    if (oracle) {
      const auto n_o = static_cast<unsigned>(std::min<std::uint64_t>(8, n_max));
      row.push_back(csv::fmt(oracle::cross_check_quadratic(f, xs, n_o)));
      row.push_back(csv::fmt(oracle::cross_check_quartic(f, xs, n_o)));
    }
    csv::write_row(out, row);
  }

  CommandResult res;
  res.exit_code = any_truncated ? 3 : (all_converged ? 0 : 1);
  res.summary = "recover: " + std::to_string(xs_grid.size()) + " point(s), " +
                std::to_string(converged_points) + " converged, truncated=" +
                (any_truncated ? "1" : "0") + arrow({path, trace_path});
  return res;
}

CommandResult run_verify_bounds(const ExperimentConfig& cfg) {
  const std::size_t dim = dimension_of(cfg);
  hyers::VerifyOptions opt;
  opt.tol = positive_real(cfg, "tol");
  opt.combiner = hyers::combiner_from_name(cfg.str("combiner"));
  opt.tnorm = tnorms::tnorm_from_name(cfg.str("tnorm"));
  opt.mu_model = hyers::mu_model_from_name(cfg.str("mu_model"));
  opt.dimension = dim;
  opt.guard = positive_real(cfg, "guard_limit");
  const std::uint64_t depth = cfg.uinteger("depth");
  if (depth < 1) invalid("depth must be >= 1");
  const std::uint64_t n_max = levels_of(cfg);
  const std::vector<double> xs_grid = x_grid(cfg);
  const std::vector<double> ts_grid = t_grid(cfg);
  const funceq::TestFunction f = single_fn(cfg, dim);
  const hyers::PerturbationProfile rho = profile_of(cfg);

  const hyers::TheoremRun runs[] = {
      hyers::verify_quadratic_part_bound(f, rho, xs_grid, ts_grid, depth, n_max,
                                         opt),
      hyers::verify_quartic_part_bound(f, rho, xs_grid, ts_grid, depth, n_max,
                                       opt),
      hyers::verify_combined_bound(f, rho, xs_grid, ts_grid, depth, n_max, opt),
  };

  const fs::path dir = output_dir(cfg);
  const fs::path path = dir / "verify_bounds.csv";
  const fs::path bounds_path = dir / "verify_bounds.bounds.csv";
  std::ofstream out = open_out(path);
  std::ofstream bounds = open_out(bounds_path);

  csv::write_row(out, {"bound", "mu_model", "hypothesis_ok",
                       "hypothesis_max_excess", "pairs_checked", "cond_proxy_n",
                       "reconstruction_checked", "reconstruction_ok",
                       "reconstruction_max_dev", "any_truncated", "all_pass"});
  csv::write_row(bounds, {"bound", "x", "t", "lhs", "rhs", "combiner", "depth",
                          "trunc_decrement", "pass"});

  bool hypothesis_ok = true;
  bool bounds_ok = true;
  for (const auto& run : runs) {
    hypothesis_ok = hypothesis_ok && run.hypothesis.ok;
    bounds_ok = bounds_ok && run.all_pass &&
                (!run.reconstruction_checked || run.reconstruction_ok);
    csv::write_row(
        out, {run.bound_kind, hyers::mu_model_name(run.resolved_model),
              csv::fmt(run.hypothesis.ok), csv::fmt(run.hypothesis.max_excess),
              csv::fmt(run.hypothesis.pairs), csv::fmt(run.cond_proxy_n),
              csv::fmt(run.reconstruction_checked),
              csv::fmt(run.reconstruction_ok),
              csv::fmt(run.reconstruction_max_dev),
              csv::fmt(run.any_truncated), csv::fmt(run.all_pass)});
    for (const auto& r : run.reports) {
      csv::write_row(bounds,
                     {r.bound, csv::fmt(r.x), csv::fmt(r.t), csv::fmt(r.lhs),
                      csv::fmt(r.rhs), hyers::combiner_name(r.combiner),
                      csv::fmt(r.depth), csv::fmt(r.trunc_decrement),
                      csv::fmt(r.pass)});
    }
  }

  CommandResult res;
  res.exit_code = !hypothesis_ok ? 4 : (bounds_ok ? 0 : 1);
  res.summary = std::string("verify-bounds: hypothesis=") +
                (hypothesis_ok ? "ok" : "failed") + ", quadratic=" +
                (runs[0].all_pass ? "pass" : "fail") + ", quartic=" +
                (runs[1].all_pass ? "pass" : "fail") + ", combined=" +
                (runs[2].all_pass ? "pass" : "fail") +
                arrow({path, bounds_path});
  return res;
}

CommandResult run_axioms(const ExperimentConfig& cfg) {
  const std::size_t dim = dimension_of(cfg);
  const auto samples = cfg.uinteger("samples");
  if (samples < 1) invalid("samples must be >= 1");
  const std::uint64_t seed = cfg.uinteger("seed");
  const auto kind = tnorms::tnorm_from_name(cfg.str("tnorm"));

  const std::string which = cfg.str("space");
  rn::RnSpace space;
  if (which == "induced") {
    space = rn::RnSpace::induced(kind);
  } else if (which == "broken-rn2") {
    space = rn::RnSpace::broken_rn2(kind);
  } else if (which == "const-eps0") {
    space = rn::RnSpace::const_eps0(kind);
  } else {
    invalid("space must be induced | broken-rn2 | const-eps0");
  }

  const auto violations =
      rn::check_axioms(space, static_cast<std::size_t>(samples), seed, dim);

  const fs::path path = fs::path(output_dir(cfg)) / "axioms.csv";
  std::ofstream out = open_out(path);
  csv::write_row(out, {"axiom", "witness", "magnitude"});
  for (const auto& v : violations) {
    csv::write_row(out, {v.axiom, v.witness, csv::fmt(v.magnitude)});
  }

  CommandResult res;
  res.exit_code = violations.empty() ? 0 : 1;
  res.summary = "axioms: space=" + which + ", " + std::to_string(samples) +
                " sample(s), " + std::to_string(violations.size()) +
                " violation(s)" + arrow({path});
  return res;
}

CommandResult run_tnorm_tail(const ExperimentConfig& cfg) {
  const std::string kind_name = cfg.str("tail_kind");
  const auto fold_kind = tnorms::tnorm_from_name(cfg.str("tail_tnorm"));
  const std::uint64_t depth = cfg.uinteger("tail_depth");
  if (depth < 1) invalid("tail_depth must be >= 1");
  const double threshold = positive_real(cfg, "tail_threshold");

  std::vector<std::uint64_t> starts;
  for (double s : cfg.real_list("tail_starts")) {
    if (!(s >= 0.0) || s != std::floor(s) || s > 1e9) {
      invalid("tail_starts must be non-negative integers");
    }
    starts.push_back(static_cast<std::uint64_t>(s));
  }
  if (starts.empty()) invalid("tail_starts must list at least one index");

  tnorms::TermGenerator terms;
  tnorms::TermGenerator defects;
  if (kind_name == "geometric") {
    terms = [](std::uint64_t i) {
      return 1.0 - std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(i, 1074)));
    };
    defects = [](std::uint64_t i) {
      return std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(i, 1074)));
    };
  } else if (kind_name == "harmonic") {
    terms = [](std::uint64_t i) { return 1.0 - 1.0 / static_cast<double>(i); };
    defects = [](std::uint64_t i) { return 1.0 / static_cast<double>(i); };
  } else if (kind_name == "ones") {
    terms = [](std::uint64_t) { return 1.0; };
    defects = [](std::uint64_t) { return 0.0; };
  } else {
    invalid("tail_kind must be geometric | harmonic | ones");
  }

  const auto conv = tnorms::lukasiewicz_tail_converges(defects, depth, threshold);

  const fs::path path = fs::path(output_dir(cfg)) / "tnorm_tail.csv";
  std::ofstream out = open_out(path);
  csv::write_row(out, {"kind", "tnorm", "start", "depth", "value",
                       "last_decrement", "defect_partial_sum",
                       "defect_block_sum", "converges"});
  for (std::uint64_t s : starts) {
    const auto tail = tnorms::t_tail(fold_kind, terms, s, depth);
    csv::write_row(out, {kind_name, tnorms::tnorm_name(fold_kind),
                         csv::fmt(tail.start), csv::fmt(tail.depth),
                         csv::fmt(tail.value), csv::fmt(tail.last_decrement),
                         csv::fmt(conv.partial_sum),
                         csv::fmt(conv.last_block_sum),
                         csv::fmt(conv.converges)});
  }

  CommandResult res;
  res.exit_code = conv.converges ? 0 : 1;
  res.summary = "tnorm-tail: kind=" + kind_name + ", " +
                std::to_string(starts.size()) + " tail(s) at depth " +
                std::to_string(depth) + ", converges=" +
                (conv.converges ? "1" : "0") + arrow({path});
  return res;
}

CommandResult run_command(const std::string& command,
                          const ExperimentConfig& cfg) {
  using Runner = CommandResult (*)(const ExperimentConfig&);
  static const std::map<std::string, Runner> kTable{
      {"check-solution", &run_check_solution},
      {"recover", &run_recover},
      {"verify-bounds", &run_verify_bounds},
      {"axioms", &run_axioms},
      {"tnorm-tail", &run_tnorm_tail},
  };
  auto it = kTable.find(command);
  if (it == kTable.end()) {
    return {2, "unknown command '" + command + "'"};
  }
  try {
    return it->second(cfg);
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what()};
  }
}

}  // namespace qqstab::cli
