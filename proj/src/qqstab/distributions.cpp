/*
 * Copyright (c) 2026 the qqstab authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "qqstab/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qqstab/csvio.hpp"

namespace qqstab::dist {

double eps0(double t) { return t > 0.0 ? 1.0 : 0.0; }

DistFn DistFn::step(double c) {
  if (!(c >= 0.0)) throw std::domain_error("step threshold must be >= 0");
  return DistFn(Kind::Step, c, {}, {});
}

DistFn DistFn::rational_control(double c) {
  if (!(c >= 0.0)) throw std::domain_error("control scale must be >= 0");
  return DistFn(Kind::RationalControl, c, {}, {});
}

DistFn DistFn::grid_sampled(std::vector<double> ts, std::vector<double> vs) {
  if (ts.empty() || ts.size() != vs.size())
    throw std::invalid_argument("grid_sampled: need matching non-empty knots");
  if (!(ts.front() > 0.0))
    throw std::invalid_argument("grid_sampled: abscissas must be positive");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] > ts[i - 1]))
      throw std::invalid_argument("grid_sampled: abscissas must increase");
  for (double v : vs)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("grid_sampled: values must lie in [0,1]");
  return DistFn(Kind::GridSampled, 0.0, std::move(ts), std::move(vs));
}

DistFn DistFn::eps0() { return step(0.0); }

double DistFn::operator()(double t) const {
  switch (kind_) {
    case Kind::Step:
      return t > c_ ? 1.0 : 0.0;
    case Kind::RationalControl: {
      if (!(t > 0.0)) return 0.0;
      if (c_ == 0.0) return 1.0;
      if (std::isinf(t)) return 1.0;
      return t / (t + c_);
    }
    case Kind::GridSampled: {
      if (!(t > 0.0)) return 0.0;
      if (t >= ts_.back()) return vs_.back();
      // Piecewise-linear from the virtual origin knot (0,0).
      const auto it = std::lower_bound(ts_.begin(), ts_.end(), t);
      const std::size_t j = static_cast<std::size_t>(it - ts_.begin());
      const double t0 = (j == 0) ? 0.0 : ts_[j - 1];
      const double v0 = (j == 0) ? 0.0 : vs_[j - 1];
      const double t1 = ts_[j];
      const double v1 = vs_[j];
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
  }
  throw std::logic_error("unreachable DistFn kind");
}

double DistFn::scale_hint() const {
  switch (kind_) {
    case Kind::Step:
    case Kind::RationalControl:
      return std::max(1.0, c_);
    case Kind::GridSampled:
      return std::max(1.0, ts_.back());
  }
  return 1.0;
}

bool dist_le(const DistFn& F, const DistFn& G, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("dist_le: empty grid");
  for (double t : grid)
    if (F(t) > G(t) + 1e-12) return false;
  return true;
}

std::vector<std::string> validate_distfn(const DistFn& F,
                                         std::span<const double> grid) {
  std::vector<std::string> diags;
  double prev_t = 0.0;
  double prev_v = 0.0;
  bool have_prev = false;
  for (double t : grid) {
    if (have_prev && !(t >= prev_t))
      throw std::invalid_argument("validate_distfn: grid must be ascending");
    const double v = F(t);
    if (!(v >= 0.0 && v <= 1.0))
      diags.push_back("range violation at t=" + csv::fmt(t));
    if (have_prev && v < prev_v - 1e-12)
      diags.push_back("monotonicity violation at t=" + csv::fmt(t));
    prev_t = t;
    prev_v = v;
    have_prev = true;
  }
  if (std::fabs(F(0.0)) > 0.0) diags.push_back("F(0) != 0");
  const double far = 1e9 * F.scale_hint();
  if (F(far) < 1.0 - 1e-6)
    diags.push_back("no approach to 1 at t=" + csv::fmt(far));
  return diags;
}

std::vector<double> default_log_grid() {
  // Four points per decade over [1e-6, 1e6].
  std::vector<double> g;
  for (int k = -24; k <= 24; ++k) g.push_back(std::pow(10.0, k / 4.0));
  return g;
}

void store_grid_csv(const DistFn& F, std::ostream& out) {
  if (F.kind() != DistFn::Kind::GridSampled)
    throw std::invalid_argument("store_grid_csv: not a grid-sampled function");
  out << "t,value\n";
  const auto& ts = F.knots_t();
  const auto& vs = F.knots_v();
  for (std::size_t i = 0; i < ts.size(); ++i)
    out << csv::fmt(ts[i]) << ',' << csv::fmt(vs[i]) << '\n';
}

DistFn load_grid_csv(std::istream& in) {
  std::vector<double> ts, vs;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string t_field, v_field;
    if (!std::getline(row, t_field, ',') || !std::getline(row, v_field))
      throw std::runtime_error("grid csv: malformed row: " + line);
    if (first) {
      first = false;
      // Optional header row.
      try {
        (void)std::stod(t_field);
      } catch (const std::exception&) {
        continue;
      }
    }
    try {
      ts.push_back(std::stod(t_field));
      vs.push_back(std::stod(v_field));
    } catch (const std::exception&) {
      throw std::runtime_error("grid csv: non-numeric row: " + line);
    }
  }
  return DistFn::grid_sampled(std::move(ts), std::move(vs));
}

}  // namespace qqstab::dist
