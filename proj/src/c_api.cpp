/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab.h"

#include <cstdio>
#include <exception>
#include <new>
#include <stdexcept>
#include <utility>

#include "qqstab/cli.hpp"
#include "qqstab/config.hpp"
#include "qqstab/distributions.hpp"
#include "qqstab/funceq.hpp"
#include "qqstab/hyers.hpp"
#include "qqstab/rnspace.hpp"
#include "qqstab/tnorms.hpp"
#include "qqstab/vec.hpp"

struct qq_distfn {
  qqstab::dist::DistFn f;
};

struct qq_testfn {
  qqstab::funceq::TestFunction f;
};

struct qq_trace {
  qqstab::hyers::HyersTrace t;
};

struct qq_config {
  qqstab::cli::ExperimentConfig c;
};

namespace {

qq_status map_exception() noexcept {
  try {
    throw;
  } catch (const qqstab::cli::ConfigError& e) {
    switch (e.kind) {
      case qqstab::cli::ConfigError::Kind::BadKey:
        return QQ_ERR_BADKEY;
      case qqstab::cli::ConfigError::Kind::Parse:
        return QQ_ERR_PARSE;
      case qqstab::cli::ConfigError::Kind::Io:
        return QQ_ERR_IO;
    }
    return QQ_ERR_INTERNAL;
  } catch (const std::domain_error&) {
    return QQ_ERR_DOMAIN;
  } catch (const std::invalid_argument&) {
    return QQ_ERR_RANGE;
  } catch (const std::bad_alloc&) {
    return QQ_ERR_INTERNAL;
  } catch (...) {
    return QQ_ERR_INTERNAL;
  }
}

template <typename Fn>
qq_status guarded(Fn&& fn) noexcept {
  try {
    std::forward<Fn>(fn)();
    return QQ_OK;
  } catch (...) {
    return map_exception();
  }
}

qqstab::tnorms::TNormKind to_kind(qq_tnorm k) {
  switch (k) {
    case QQ_TNORM_MINIMUM:
      return qqstab::tnorms::TNormKind::Minimum;
    case QQ_TNORM_PRODUCT:
      return qqstab::tnorms::TNormKind::Product;
    case QQ_TNORM_LUKASIEWICZ:
      return qqstab::tnorms::TNormKind::Lukasiewicz;
  }
  throw std::invalid_argument("invalid qq_tnorm value");
}

qqstab::hyers::CombinerMode to_mode(qq_combiner c) {
  switch (c) {
    case QQ_COMBINER_TNORM:
      return qqstab::hyers::CombinerMode::TNormFold;
    case QQ_COMBINER_CLAMPED_SUM:
      return qqstab::hyers::CombinerMode::ClampedSum;
  }
  throw std::invalid_argument("invalid qq_combiner value");
}

qqstab::hyers::PerturbationProfile to_profile(qq_rho_family family,
                                              double c_or_theta, double p) {
  switch (family) {
    case QQ_RHO_STEP_DEFECT:
      return qqstab::hyers::PerturbationProfile::step_defect(c_or_theta);
    case QQ_RHO_CONTROL_TYPE:
      return qqstab::hyers::PerturbationProfile::control_type(c_or_theta, p);
  }
  throw std::invalid_argument("invalid qq_rho_family value");
}

qqstab::Vector to_vec(const double* x, size_t dim) {
  return qqstab::Vector(x, x + dim);
}

qqstab::funceq::Evaluable wrap_eval(qq_eval_fn fn, void* ctx) {
  return [fn, ctx](const qqstab::Vector& v) {
    return fn(v.data(), v.size(), ctx);
  };
}

using LimitFn = qqstab::hyers::LimitResult (*)(const qqstab::funceq::Evaluable&,
                                               const qqstab::Vector&,
                                               std::uint64_t, double, double);

qq_status run_limit(LimitFn limit, qq_eval_fn part, void* ctx, const double* x,
                    size_t dim, uint64_t n_max, double tol, double guard,
                    double* value, qq_trace** trace) {
  if (part == nullptr || x == nullptr || value == nullptr) return QQ_ERR_NULL;
  if (dim == 0) return QQ_ERR_EMPTY;
  if (trace != nullptr) *trace = nullptr;
  return guarded([&] {
    auto res = limit(wrap_eval(part, ctx), to_vec(x, dim), n_max, tol, guard);
    *value = res.value;
    if (trace != nullptr) *trace = new qq_trace{std::move(res.trace)};
  });
}

using BoundFn = qqstab::hyers::BoundValue (*)(
    const qqstab::hyers::PerturbationProfile&, const qqstab::Vector&, double,
    std::uint64_t, qqstab::hyers::CombinerMode, qqstab::tnorms::TNormKind);

qq_status run_bound(BoundFn bound, qq_rho_family family, double c_or_theta,
                    double p, const double* x, size_t dim, double t,
                    uint64_t depth, qq_combiner combiner, qq_tnorm tnorm,
                    double* value, double* last_decrement) {
  if (x == nullptr || value == nullptr) return QQ_ERR_NULL;
  if (dim == 0) return QQ_ERR_EMPTY;
  return guarded([&] {
    auto res = bound(to_profile(family, c_or_theta, p), to_vec(x, dim), t,
                     depth, to_mode(combiner), to_kind(tnorm));
    *value = res.value;
    if (last_decrement != nullptr) *last_decrement = res.last_decrement;
  });
}

}  // namespace

extern "C" {

const char* qq_version(void) { return "1.0.0"; }

const char* qq_status_str(qq_status s) {
  switch (s) {
    case QQ_OK:
      return "ok";
    case QQ_ERR_NULL:
      return "null pointer";
    case QQ_ERR_DOMAIN:
      return "domain error";
    case QQ_ERR_EMPTY:
      return "empty input";
    case QQ_ERR_PARSE:
      return "parse error";
    case QQ_ERR_BADKEY:
      return "unknown key";
    case QQ_ERR_RANGE:
      return "range error";
    case QQ_ERR_IO:
      return "io error";
    case QQ_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

qq_status qq_tnorm_apply(qq_tnorm kind, double a, double b, double* out) {
  if (out == nullptr) return QQ_ERR_NULL;
  return guarded([&] { *out = qqstab::tnorms::t_apply(to_kind(kind), a, b); });
}

qq_status qq_tnorm_fold(qq_tnorm kind, const double* xs, size_t n,
                        double* out) {
  if (xs == nullptr || out == nullptr) return QQ_ERR_NULL;
  if (n == 0) return QQ_ERR_EMPTY;
  return guarded([&] {
    *out = qqstab::tnorms::t_fold(to_kind(kind), std::span<const double>(xs, n));
  });
}

qq_status qq_distfn_step(double c, qq_distfn** out) {
  if (out == nullptr) return QQ_ERR_NULL;
  return guarded([&] { *out = new qq_distfn{qqstab::dist::DistFn::step(c)}; });
}

qq_status qq_distfn_rational_control(double c, qq_distfn** out) {
  if (out == nullptr) return QQ_ERR_NULL;
  return guarded(
      [&] { *out = new qq_distfn{qqstab::dist::DistFn::rational_control(c)}; });
}

qq_status qq_distfn_grid(const double* ts, const double* vs, size_t n,
                         qq_distfn** out) {
  if (ts == nullptr || vs == nullptr || out == nullptr) return QQ_ERR_NULL;
  if (n == 0) return QQ_ERR_EMPTY;
  return guarded([&] {
    *out = new qq_distfn{qqstab::dist::DistFn::grid_sampled(
        std::vector<double>(ts, ts + n), std::vector<double>(vs, vs + n))};
  });
}

qq_status qq_distfn_eps0(qq_distfn** out) {
  if (out == nullptr) return QQ_ERR_NULL;
  return guarded([&] { *out = new qq_distfn{qqstab::dist::DistFn::eps0()}; });
}

qq_status qq_distfn_eval(const qq_distfn* f, double t, double* out) {
  if (f == nullptr || out == nullptr) return QQ_ERR_NULL;
  return guarded([&] { *out = f->f(t); });
}

void qq_distfn_free(qq_distfn* f) { delete f; }

qq_status qq_testfn_new(double a, double b, double delta, uint64_t seed,
                        size_t dimension, qq_testfn** out) {
  if (out == nullptr) return QQ_ERR_NULL;
  if (dimension == 0) return QQ_ERR_RANGE;
  if (!(delta >= 0.0)) return QQ_ERR_DOMAIN;
  return guarded([&] {
    *out = new qq_testfn{
        qqstab::funceq::TestFunction{a, b, delta, seed, dimension}};
  });
}

qq_status qq_testfn_eval(const qq_testfn* f, const double* x, size_t dim,
                         double* out) {
  if (f == nullptr || x == nullptr || out == nullptr) return QQ_ERR_NULL;
  if (dim != f->f.dimension) return QQ_ERR_RANGE;
  return guarded([&] { *out = f->f(to_vec(x, dim)); });
}

qq_status qq_testfn_residual_qq(const qq_testfn* f, const double* x,
                                const double* y, size_t dim, double* out) {
  if (f == nullptr || x == nullptr || y == nullptr || out == nullptr) {
    return QQ_ERR_NULL;
  }
  if (dim != f->f.dimension) return QQ_ERR_RANGE;
  return guarded([&] {
    *out = qqstab::funceq::residual_qq(qqstab::funceq::as_evaluable(f->f),
                                       to_vec(x, dim), to_vec(y, dim));
  });
}

void qq_testfn_free(qq_testfn* f) { delete f; }

qq_status qq_quadratic_limit(qq_eval_fn g, void* ctx, const double* x,
                             size_t dim, uint64_t n_max, double tol,
                             double guard, double* value, qq_trace** trace) {
  return run_limit(&qqstab::hyers::quadratic_limit, g, ctx, x, dim, n_max, tol,
                   guard, value, trace);
}

qq_status qq_quartic_limit(qq_eval_fn h, void* ctx, const double* x, size_t dim,
                           uint64_t n_max, double tol, double guard,
                           double* value, qq_trace** trace) {
  return run_limit(&qqstab::hyers::quartic_limit, h, ctx, x, dim, n_max, tol,
                   guard, value, trace);
}

size_t qq_trace_levels(const qq_trace* t) {
  return t == nullptr ? 0 : t->t.levels.size();
}

qq_status qq_trace_level(const qq_trace* t, size_t i, uint64_t* n,
                         double* value, double* delta) {
  if (t == nullptr) return QQ_ERR_NULL;
  if (i >= t->t.levels.size()) return QQ_ERR_RANGE;
  const auto& lv = t->t.levels[i];
  if (n != nullptr) *n = lv.n;
  if (value != nullptr) *value = lv.value;
  if (delta != nullptr) *delta = lv.delta;
  return QQ_OK;
}

int qq_trace_converged(const qq_trace* t) {
  return (t != nullptr && t->t.converged) ? 1 : 0;
}

int qq_trace_truncated(const qq_trace* t) {
  return (t != nullptr && t->t.truncated) ? 1 : 0;
}

double qq_trace_ratio(const qq_trace* t) {
  return t == nullptr ? 0.0 : t->t.estimated_ratio;
}

void qq_trace_free(qq_trace* t) { delete t; }

qq_status qq_psi(qq_rho_family family, double c_or_theta, double p,
                 const double* x, size_t dim, double t, qq_combiner combiner,
                 qq_tnorm tnorm, double* out) {
  if (x == nullptr || out == nullptr) return QQ_ERR_NULL;
  if (dim == 0) return QQ_ERR_EMPTY;
  return guarded([&] {
    *out = qqstab::hyers::psi(to_profile(family, c_or_theta, p), to_vec(x, dim),
                              t, to_mode(combiner), to_kind(tnorm));
  });
}

qq_status qq_bound_rhs_quadratic(qq_rho_family family, double c_or_theta,
                                 double p, const double* x, size_t dim,
                                 double t, uint64_t depth, qq_combiner combiner,
                                 qq_tnorm tnorm, double* value,
                                 double* last_decrement) {
  return run_bound(&qqstab::hyers::bound_rhs_quadratic, family, c_or_theta, p,
                   x, dim, t, depth, combiner, tnorm, value, last_decrement);
}

qq_status qq_bound_rhs_quartic(qq_rho_family family, double c_or_theta,
                               double p, const double* x, size_t dim, double t,
                               uint64_t depth, qq_combiner combiner,
                               qq_tnorm tnorm, double* value,
                               double* last_decrement) {
  return run_bound(&qqstab::hyers::bound_rhs_quartic, family, c_or_theta, p, x,
                   dim, t, depth, combiner, tnorm, value, last_decrement);
}

qq_status qq_bound_rhs_combined(qq_rho_family family, double c_or_theta,
                                double p, const double* x, size_t dim, double t,
                                uint64_t depth, qq_combiner combiner,
                                qq_tnorm tnorm, double* value,
                                double* last_decrement) {
  return run_bound(&qqstab::hyers::bound_rhs_combined, family, c_or_theta, p, x,
                   dim, t, depth, combiner, tnorm, value, last_decrement);
}

qq_status qq_check_axioms(qq_space space, qq_tnorm tnorm, size_t samples,
                          uint64_t seed, size_t dimension, size_t* violations) {
  if (violations == nullptr) return QQ_ERR_NULL;
  if (samples == 0 || dimension == 0) return QQ_ERR_RANGE;
  return guarded([&] {
    const auto kind = to_kind(tnorm);
    qqstab::rn::RnSpace sp;
    switch (space) {
      case QQ_SPACE_INDUCED:
        sp = qqstab::rn::RnSpace::induced(kind);
        break;
      case QQ_SPACE_BROKEN_RN2:
        sp = qqstab::rn::RnSpace::broken_rn2(kind);
        break;
      case QQ_SPACE_CONST_EPS0:
        sp = qqstab::rn::RnSpace::const_eps0(kind);
        break;
      default:
        throw std::invalid_argument("invalid qq_space value");
    }
    *violations = qqstab::rn::check_axioms(sp, samples, seed, dimension).size();
  });
}

qq_status qq_config_new(qq_config** out) {
  if (out == nullptr) return QQ_ERR_NULL;
  return guarded([&] { *out = new qq_config{}; });
}

qq_status qq_config_load(qq_config* cfg, const char* path) {
  if (cfg == nullptr || path == nullptr) return QQ_ERR_NULL;
  return guarded([&] { cfg->c.load_file(path); });
}

qq_status qq_config_set(qq_config* cfg, const char* key, const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) return QQ_ERR_NULL;
  return guarded([&] { cfg->c.set(key, value); });
}

void qq_config_free(qq_config* cfg) { delete cfg; }

size_t qq_config_key_count(void) {
  return qqstab::cli::ExperimentConfig::keys().size();
}

const char* qq_config_key_name(size_t i) {
  auto keys = qqstab::cli::ExperimentConfig::keys();
  return i < keys.size() ? keys[i].name : nullptr;
}

const char* qq_config_key_default(size_t i) {
  auto keys = qqstab::cli::ExperimentConfig::keys();
  return i < keys.size() ? keys[i].def : nullptr;
}

const char* qq_config_key_help(size_t i) {
  auto keys = qqstab::cli::ExperimentConfig::keys();
  return i < keys.size() ? keys[i].help : nullptr;
}

qq_status qq_run(const qq_config* cfg, const char* command, int* exit_code,
                 char* summary, size_t summary_len) {
  if (cfg == nullptr || command == nullptr || exit_code == nullptr) {
    return QQ_ERR_NULL;
  }
  return guarded([&] {
    const auto res = qqstab::cli::run_command(command, cfg->c);
    *exit_code = res.exit_code;
    if (summary != nullptr && summary_len > 0) {
      std::snprintf(summary, summary_len, "%s", res.summary.c_str());
    }
  });
}

}  // extern "C"
