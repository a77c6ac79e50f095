/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/hyers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qqstab/csvio.hpp"

namespace qqstab::hyers {

CombinerMode combiner_from_name(const std::string& name) {
  if (name == "tnorm") return CombinerMode::TNormFold;
  if (name == "clamped-sum") return CombinerMode::ClampedSum;
  throw std::invalid_argument("unknown combiner: " + name);
}

const char* combiner_name(CombinerMode mode) {
  return mode == CombinerMode::TNormFold ? "tnorm" : "clamped-sum";
}

PerturbationProfile PerturbationProfile::step_defect(double c) {
  if (!(c >= 0.0)) throw std::domain_error("step defect bound must be >= 0");
  PerturbationProfile p;
  p.family = Family::StepDefect;
  p.c = c;
  return p;
}

PerturbationProfile PerturbationProfile::control_type(double theta, double p) {
  if (!(theta >= 0.0) || !(p >= 0.0))
    throw std::domain_error("control-type parameters must be >= 0");
  PerturbationProfile r;
  r.family = Family::ControlType;
  r.theta = theta;
  r.p = p;
  return r;
}

double PerturbationProfile::scale(const Vector& x, const Vector& y) const {
  if (family == Family::StepDefect) return c;
  return theta * (std::pow(norm2(x), p) + std::pow(norm2(y), p));
}

dist::DistFn PerturbationProfile::rho(const Vector& x, const Vector& y) const {
  if (family == Family::StepDefect) return dist::DistFn::step(c);
  return dist::DistFn::rational_control(scale(x, y));
}

double combine(CombinerMode mode, tnorms::TNormKind tnorm,
               std::span<const double> terms) {
  if (mode == CombinerMode::TNormFold) return tnorms::t_fold(tnorm, terms);
  double s = 0.0;
  for (double v : terms) s += v;
  return std::min(1.0, s);
}

double psi(const PerturbationProfile& rho, const Vector& x, double t,
           CombinerMode mode, tnorms::TNormKind tnorm) {
  if (!(t > 0.0)) throw std::domain_error("psi: t must be positive");
  const Vector zero(x.size(), 0.0);
  const double terms[3] = {
      rho.rho(x, x)(t / 4.0),
      rho.rho(x, scaled(2.0, x))(t),
      rho.rho(zero, x)(0.75 * t),
  };
  return combine(mode, tnorm, terms);
}

namespace {

void finish_trace(HyersTrace& tr, double tol) {
  const auto& lv = tr.levels;
  tr.converged = lv.size() >= 2 && lv.back().delta < tol;
  // Mean quotient of the last three deltas (two ratios); zero denominators
  // are skipped, and no usable quotient leaves the estimate at 0.
  if (lv.size() >= 4) {  // levels 0..3 give deltas at n >= 1
    const double d0 = lv[lv.size() - 3].delta;
    const double d1 = lv[lv.size() - 2].delta;
    const double d2 = lv[lv.size() - 1].delta;
    double sum = 0.0;
    int cnt = 0;
    if (d0 > 0.0) { sum += d1 / d0; ++cnt; }
    if (d1 > 0.0) { sum += d2 / d1; ++cnt; }
    tr.estimated_ratio = cnt ? sum / cnt : 0.0;
  }
}

LimitResult rescaled_limit(const funceq::Evaluable& part, const Vector& x,
                           std::uint64_t n_max, double tol, double guard,
                           int bits_per_level) {
  if (n_max < 2) throw std::invalid_argument("limit: n_max must be >= 2");
  if (n_max > 64) throw std::invalid_argument("limit: n_max must be <= 64");
  if (!(guard > 0.0)) throw std::domain_error("limit: guard must be positive");
  LimitResult res;
  const double x_mag = max_abs(x);
  double prev = 0.0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (x_mag * std::ldexp(1.0, static_cast<int>(n)) > guard) {
      res.trace.truncated = true;
      break;
    }
    const Vector xn = scaled(std::ldexp(1.0, static_cast<int>(n)), x);
    const double value =
        std::ldexp(part(xn), -bits_per_level * static_cast<int>(n));
    const double delta = n == 0 ? 0.0 : std::fabs(value - prev);
    res.trace.levels.push_back({n, value, delta});
    prev = value;
  }
  if (res.trace.levels.empty())
    throw std::domain_error("limit: initial point already beyond the guard");
  res.value = res.trace.levels.back().value;
  finish_trace(res.trace, tol);
  return res;
}

}  // namespace

LimitResult quadratic_limit(const funceq::Evaluable& g, const Vector& x,
                            std::uint64_t n_max, double tol, double guard) {
  return rescaled_limit(g, x, n_max, tol, guard, 2);
}

LimitResult quartic_limit(const funceq::Evaluable& h, const Vector& x,
                          std::uint64_t n_max, double tol, double guard) {
  return rescaled_limit(h, x, n_max, tol, guard, 4);
}

namespace {

// Incremental t-norm fold with decrement tracking and stabilization count.
struct FoldState {
  double acc = 1.0;
  bool started = false;
  double last_dec = 0.0;
  int zero_run = 0;

  void push(tnorms::TNormKind kind, double term) {
    if (!started) {
      acc = term;
      started = true;
      return;
    }
    const double next = tnorms::t_apply(kind, acc, term);
    last_dec = acc - next;
    zero_run = last_dec == 0.0 ? zero_run + 1 : 0;
    acc = next;
  }
};

using TermSchedule = void (*)(const PerturbationProfile&, const Vector&,
                              const Vector&, const Vector&, double,
                              std::uint64_t, double out[3]);

void quadratic_terms(const PerturbationProfile& rho, const Vector& zero,
                     const Vector& xp, const Vector& xn, double t,
                     std::uint64_t i, double out[3]) {
  const double ti = std::ldexp(t, static_cast<int>(i));
  out[0] = rho.rho(xp, xp)(ti / 4.0);
  out[1] = rho.rho(xp, xn)(ti);
  out[2] = rho.rho(zero, xp)(0.75 * ti);
}

void quartic_terms(const PerturbationProfile& rho, const Vector& zero,
                   const Vector& xp, const Vector& xn, double t,
                   std::uint64_t i, double out[3]) {
  const double ti = std::ldexp(t, 3 * static_cast<int>(i));
  out[0] = rho.rho(xp, xp)(ti / 4.0);
  out[1] = rho.rho(xp, xn)(ti);
  out[2] = rho.rho(zero, xp)(0.75 * ti);
}

BoundValue fold_schedule(const PerturbationProfile& rho, const Vector& x,
                         double t, std::uint64_t depth, CombinerMode mode,
                         tnorms::TNormKind tnorm, TermSchedule schedule) {
  if (!(t > 0.0)) throw std::domain_error("bound fold: t must be positive");
  if (depth < 1) throw std::invalid_argument("bound fold: depth must be >= 1");
  const Vector zero(x.size(), 0.0);
  FoldState st;
  for (std::uint64_t i = 1; i <= depth; ++i) {
    const double sc = std::ldexp(1.0, static_cast<int>(i) - 1);
    const Vector xp = scaled(sc, x);
    const Vector xn = scaled(2.0 * sc, x);
    double terms[3];
    schedule(rho, zero, xp, xn, t, i, terms);
    st.push(tnorm, combine(mode, tnorm, terms));
    if (st.zero_run >= 5) break;  // fold has stabilized
  }
  return {st.acc, st.last_dec};
}

}  // namespace

BoundValue bound_rhs_quadratic(const PerturbationProfile& rho, const Vector& x,
                               double t, std::uint64_t depth, CombinerMode mode,
                               tnorms::TNormKind tnorm) {
  return fold_schedule(rho, x, t, depth, mode, tnorm, quadratic_terms);
}

BoundValue bound_rhs_quartic(const PerturbationProfile& rho, const Vector& x,
                             double t, std::uint64_t depth, CombinerMode mode,
                             tnorms::TNormKind tnorm) {
  return fold_schedule(rho, x, t, depth, mode, tnorm, quartic_terms);
}

BoundValue bound_rhs_combined(const PerturbationProfile& rho, const Vector& x,
                              double t, std::uint64_t depth, CombinerMode mode,
                              tnorms::TNormKind tnorm) {
  if (!(t > 0.0)) throw std::domain_error("bound fold: t must be positive");
  if (depth < 1) throw std::invalid_argument("bound fold: depth must be >= 1");
  const Vector zero(x.size(), 0.0);
  FoldState lo, hi;  // 2^i and 2^{3i} argument schedules
  for (std::uint64_t i = 1; i <= depth; ++i) {
    const double sc = std::ldexp(1.0, static_cast<int>(i) - 1);
    const Vector xp = scaled(sc, x);
    const Vector xn = scaled(2.0 * sc, x);
    const double tl = std::ldexp(t, static_cast<int>(i));
    const double th = std::ldexp(t, 3 * static_cast<int>(i));
    const double terms_lo[3] = {rho.rho(xp, xp)(3.0 * tl),
                                rho.rho(xp, xn)(12.0 * tl),
                                rho.rho(zero, xp)(9.0 * tl)};
    const double terms_hi[3] = {rho.rho(xp, xp)(3.0 * th),
                                rho.rho(xp, xn)(12.0 * th),
                                rho.rho(zero, xp)(9.0 * th)};
    lo.push(tnorm, combine(mode, tnorm, terms_lo));
    hi.push(tnorm, combine(mode, tnorm, terms_hi));
    if (lo.zero_run >= 5 && hi.zero_run >= 5) break;
  }
  const double folds[2] = {lo.acc, hi.acc};
  return {combine(mode, tnorm, folds), std::max(lo.last_dec, hi.last_dec)};
}

MuModel mu_model_from_name(const std::string& name) {
  if (name == "auto") return MuModel::Auto;
  if (name == "step") return MuModel::Step;
  if (name == "induced") return MuModel::Induced;
  throw std::invalid_argument("unknown mu model: " + name);
}

const char* mu_model_name(MuModel m) {
  switch (m) {
    case MuModel::Auto: return "auto";
    case MuModel::Step: return "step";
    case MuModel::Induced: return "induced";
  }
  return "?";
}

namespace {

MuModel resolve_mu_model(MuModel m, PerturbationProfile::Family fam) {
  if (m != MuModel::Auto) return m;
  return fam == PerturbationProfile::Family::StepDefect ? MuModel::Step
                                                        : MuModel::Induced;
}

double model_mu(MuModel resolved, double defect_abs, double t) {
  if (resolved == MuModel::Step) return t > defect_abs ? 1.0 : 0.0;
  return t > 0.0 ? t / (t + defect_abs) : 0.0;
}

HypothesisCheck check_defect_domination(const funceq::TestFunction& f,
                                        const PerturbationProfile& rho,
                                        std::span<const double> xgrid,
                                        MuModel resolved,
                                        std::size_t dimension) {
  HypothesisCheck hc;
  hc.max_excess = -std::numeric_limits<double>::infinity();
  const auto fe = funceq::as_evaluable(f);
  const bool matching =
      (resolved == MuModel::Step &&
       rho.family == PerturbationProfile::Family::StepDefect) ||
      (resolved == MuModel::Induced &&
       rho.family == PerturbationProfile::Family::ControlType);
  for (double xs : xgrid) {
    for (double ys : xgrid) {
      const Vector X = axis_vector(dimension, xs);
      const Vector Y = axis_vector(dimension, ys);
      const double R = std::fabs(funceq::residual_qq(fe, X, Y));
      // Domination is decidable per representation; across representations
      // only a zero defect is dominated.
      const double allowed = matching ? rho.scale(X, Y) : 0.0;
      // Rounding slack proportional to the stencil magnitude of f.
      const Vector X2 = scaled(2.0, X);
      double fmax = 1.0;
      for (const Vector& pt :
           {add(X2, Y), sub(X2, Y), add(X, Y), sub(X, Y), X2, X, Y})
        fmax = std::max(fmax, std::fabs(fe(pt)));
      const double slack = 1e-9 * fmax;
      const double excess = R - allowed;
      if (excess > hc.max_excess) {
        hc.max_excess = excess;
        hc.worst_witness = "x=" + csv::fmt(xs) + ";y=" + csv::fmt(ys) +
                           ";residual=" + csv::fmt(R) +
                           ";allowed=" + csv::fmt(allowed);
      }
      if (excess > slack) hc.ok = false;
      ++hc.pairs;
    }
  }
  if (hc.pairs == 0) {
    hc.ok = false;
    hc.max_excess = 0.0;
    hc.worst_witness = "empty grid";
  }
  return hc;
}

// Least n <= 64 at which rho_{2^n x, 2^n x}(2^{bits*n} t_ref) clears 1 - 1e-6
// for every grid x; -1 if never. Finite proxy of the limit conditions that
// the rescaled perturbations vanish.
std::int64_t condition_proxy(const PerturbationProfile& rho,
                             std::span<const double> xgrid,
                             std::size_t dimension, double t_ref, int bits) {
  for (std::int64_t n = 0; n <= 64; ++n) {
    bool all = true;
    for (double xs : xgrid) {
      const Vector X =
          axis_vector(dimension, std::ldexp(xs, static_cast<int>(n)));
      const double arg = std::ldexp(t_ref, bits * static_cast<int>(n));
      if (rho.rho(X, X)(arg) <= 1.0 - 1e-6) {
        all = false;
        break;
      }
    }
    if (all) return n;
  }
  return -1;
}

enum class BoundKind { Quadratic, Quartic, Combined };

TheoremRun verify_impl(BoundKind kind, const funceq::TestFunction& f,
                       const PerturbationProfile& rho,
                       std::span<const double> xgrid,
                       std::span<const double> tgrid, std::uint64_t depth,
                       std::uint64_t n_max, const VerifyOptions& opt) {
  if (xgrid.empty() || tgrid.empty())
    throw std::invalid_argument("verify: empty grid");
  for (double t : tgrid)
    if (!(t > 0.0)) throw std::domain_error("verify: tgrid must be positive");

  TheoremRun run;
  run.bound_kind = kind == BoundKind::Quadratic  ? "quadratic"
                   : kind == BoundKind::Quartic ? "quartic"
                                                : "combined";
  run.resolved_model = resolve_mu_model(opt.mu_model, rho.family);
  run.hypothesis =
      check_defect_domination(f, rho, xgrid, run.resolved_model, opt.dimension);

  const double t_ref = *std::min_element(tgrid.begin(), tgrid.end());
  switch (kind) {
    case BoundKind::Quadratic:
      run.cond_proxy_n = condition_proxy(rho, xgrid, opt.dimension, t_ref, 2);
      break;
    case BoundKind::Quartic:
      run.cond_proxy_n = condition_proxy(rho, xgrid, opt.dimension, t_ref, 4);
      break;
    case BoundKind::Combined: {
      const auto n2 = condition_proxy(rho, xgrid, opt.dimension, t_ref, 2);
      const auto n4 = condition_proxy(rho, xgrid, opt.dimension, t_ref, 4);
      run.cond_proxy_n = (n2 < 0 || n4 < 0) ? -1 : std::max(n2, n4);
      break;
    }
  }

  const auto fe = funceq::as_evaluable(f);
  const auto g = funceq::part_g(fe);
  const auto h = funceq::part_h(fe);

  bool all_pass = true;
  for (double xs : xgrid) {
    const Vector X = axis_vector(opt.dimension, xs);
    double defect = 0.0;
    switch (kind) {
      case BoundKind::Quadratic: {
        const auto lim = quadratic_limit(g, X, n_max, opt.tol, opt.guard);
        run.any_truncated |= lim.trace.truncated;
        defect = g(X) - lim.value;
        break;
      }
      case BoundKind::Quartic: {
        const auto lim = quartic_limit(h, X, n_max, opt.tol, opt.guard);
        run.any_truncated |= lim.trace.truncated;
        defect = h(X) - lim.value;
        break;
      }
      case BoundKind::Combined: {
        const auto lg = quadratic_limit(g, X, n_max, opt.tol, opt.guard);
        const auto lh = quartic_limit(h, X, n_max, opt.tol, opt.guard);
        run.any_truncated |= lg.trace.truncated || lh.trace.truncated;
        const double q1 = -lg.value / 12.0;
        const double q2 = lh.value / 12.0;
        defect = f(X) - q1 - q2;
        if (f.delta == 0.0) {
          run.reconstruction_checked = true;
          const double dev = std::fabs(defect);
          run.reconstruction_max_dev =
              std::max(run.reconstruction_max_dev, dev);
          if (dev > 1e-9 * std::max(1.0, std::fabs(f(X))))
            run.reconstruction_ok = false;
        }
        break;
      }
    }

    const double defect_abs = std::fabs(defect);
    for (double t : tgrid) {
      const double lhs = model_mu(run.resolved_model, defect_abs, t);
      for (CombinerMode mode :
           {CombinerMode::TNormFold, CombinerMode::ClampedSum}) {
        BoundValue bv;
        switch (kind) {
          case BoundKind::Quadratic:
            bv = bound_rhs_quadratic(rho, X, t, depth, mode, opt.tnorm);
            break;
          case BoundKind::Quartic:
            bv = bound_rhs_quartic(rho, X, t, depth, mode, opt.tnorm);
            break;
          case BoundKind::Combined:
            bv = bound_rhs_combined(rho, X, t, depth, mode, opt.tnorm);
            break;
        }
        const bool pass = lhs >= bv.value - 1e-9;
        if (mode == opt.combiner && !pass) all_pass = false;
        run.reports.push_back({run.bound_kind, xs, t, lhs, bv.value, mode,
                               depth, bv.last_decrement, pass});
      }
    }
  }
  run.all_pass = all_pass;
  return run;
}

}  // namespace

TheoremRun verify_quadratic_part_bound(const funceq::TestFunction& f,
                                       const PerturbationProfile& rho,
                                       std::span<const double> xgrid,
                                       std::span<const double> tgrid,
                                       std::uint64_t depth, std::uint64_t n_max,
                                       const VerifyOptions& opt) {
  return verify_impl(BoundKind::Quadratic, f, rho, xgrid, tgrid, depth, n_max,
                     opt);
}

TheoremRun verify_quartic_part_bound(const funceq::TestFunction& f,
                                     const PerturbationProfile& rho,
                                     std::span<const double> xgrid,
                                     std::span<const double> tgrid,
                                     std::uint64_t depth, std::uint64_t n_max,
                                     const VerifyOptions& opt) {
  return verify_impl(BoundKind::Quartic, f, rho, xgrid, tgrid, depth, n_max,
                     opt);
}

TheoremRun verify_combined_bound(const funceq::TestFunction& f,
                                 const PerturbationProfile& rho,
                                 std::span<const double> xgrid,
                                 std::span<const double> tgrid,
                                 std::uint64_t depth, std::uint64_t n_max,
                                 const VerifyOptions& opt) {
  return verify_impl(BoundKind::Combined, f, rho, xgrid, tgrid, depth, n_max,
                     opt);
}

double uniqueness_probe(const funceq::TestFunction& f, const Vector& x,
                        std::span<const std::uint64_t> schedules, double tol,
                        double guard) {
  if (schedules.empty())
    throw std::invalid_argument("uniqueness_probe: no schedules");
  const auto fe = funceq::as_evaluable(f);
  const auto g = funceq::part_g(fe);
  const auto h = funceq::part_h(fe);

  std::vector<double> q1s, q2s;
  for (std::uint64_t n_max : schedules) {
    const auto lg = quadratic_limit(g, x, n_max, tol, guard);
    const auto lh = quartic_limit(h, x, n_max, tol, guard);
    q1s.push_back(lg.value);
    q2s.push_back(lh.value);
    // Direct jump to the final level: same limit, different evaluation order.
    const std::uint64_t n = lg.trace.levels.back().n;
    const Vector xn = scaled(std::ldexp(1.0, static_cast<int>(n)), x);
    q1s.push_back(std::ldexp(g(xn), -2 * static_cast<int>(n)));
    const std::uint64_t m = lh.trace.levels.back().n;
    const Vector xm = scaled(std::ldexp(1.0, static_cast<int>(m)), x);
    q2s.push_back(std::ldexp(h(xm), -4 * static_cast<int>(m)));
  }

  double dev = 0.0;
  for (std::size_t i = 0; i < q1s.size(); ++i)
    for (std::size_t j = i + 1; j < q1s.size(); ++j) {
      dev = std::max(dev, std::fabs(q1s[i] - q1s[j]));
      dev = std::max(dev, std::fabs(q2s[i] - q2s[j]));
    }
  return dev;
}

}  // namespace qqstab::hyers
