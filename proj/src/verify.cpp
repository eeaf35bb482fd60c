// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "registry_rows.hpp"

namespace dblgamma {
namespace {

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InvalidArgument("grid: bad number '" + std::string(text) + "'");
  }
  return v;
}

// Rounds to 15 significant digits so that 0.1 + 2 * 0.1 is reported as 0.3.
double snap(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string format_tag(const IdentityCheck& check, double p) {
  if (check.param_name.empty()) return {};
  if (check.tag) return check.tag(p);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return check.param_name + "=" + buf;
}

constexpr std::size_t kMaxGridPoints = 100000;

}  // namespace

GridSpec GridSpec::range(double start, double stop, double step) {
  GridSpec g;
  g.start = start;
  g.stop = stop;
  g.step = step;
  return g;
}

GridSpec GridSpec::list(std::vector<double> points) {
  GridSpec g;
  g.points = std::move(points);
  return g;
}

GridSpec GridSpec::parse(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t pos = 0;
    while (true) {
      const auto next = text.find(':', pos);
      parts.push_back(parse_number(text.substr(pos, next - pos)));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (parts.size() != 3) throw InvalidArgument("grid: expected start:stop:step");
    GridSpec g = range(parts[0], parts[1], parts[2]);
    g.expand();  // validate now
    return g;
  }
  std::vector<double> pts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(',', pos);
    pts.push_back(parse_number(text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return list(std::move(pts));
}

std::vector<double> GridSpec::expand() const {
  if (!points.empty()) {
    for (const double p : points) {
      if (!std::isfinite(p)) throw InvalidArgument("grid: non-finite point");
    }
    if (points.size() > kMaxGridPoints) throw InvalidArgument("grid: too many points");
    return points;
  }
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw InvalidArgument("grid: bounds must be finite");
  }
  if (!(step > 0.0)) throw InvalidArgument("grid: step must be positive");
  if (stop < start) throw InvalidArgument("grid: stop is below start");
  const double span = (stop - start) / step;
  if (span >= static_cast<double>(kMaxGridPoints)) throw InvalidArgument("grid: too many points");
  const auto n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(snap(start + static_cast<double>(i) * step));
  return out;
}

void Registry::add(IdentityCheck check) {
  if (check.id.empty()) throw InvalidArgument("registry: empty id");
  if (!(check.tolerance > 0.0)) throw InvalidArgument("registry: tolerance must be positive");
  if (!check.sides) throw InvalidArgument("registry: row '" + check.id + "' has no evaluator");
  if (!check.params.empty() && check.param_name.empty()) {
    throw InvalidArgument("registry: row '" + check.id + "' has parameters but no name");
  }
  if (contains(check.id)) throw InvalidArgument("registry: duplicate id '" + check.id + "'");
  const auto at = std::lower_bound(
      checks_.begin(), checks_.end(), check.id,
      [](const IdentityCheck& c, const std::string& id) { return c.id < id; });
  checks_.insert(at, std::move(check));
}

bool Registry::contains(std::string_view id) const {
  return std::any_of(checks_.begin(), checks_.end(),
                     [&](const IdentityCheck& c) { return c.id == id; });
}

const IdentityCheck& Registry::find(std::string_view id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return c;
  }
  throw UnknownIdentityError(std::string(id));
}

const Registry& Registry::builtin() {
  static const Registry reg = [] {
    Registry r;
    for (auto& row : detail::builtin_rows()) r.add(std::move(row));
    return r;
  }();
  return reg;
}

IdentityReport run_identity(const Registry& registry, std::string_view id,
                            const RunConfig& config) {
  const IdentityCheck& check = registry.find(id);
  config.opts.validate();
  if (config.tolerance && !(*config.tolerance > 0.0)) {
    throw InvalidArgument("tolerance override must be positive");
  }
  const std::vector<double> grid = (config.grid ? *config.grid : check.default_grid).expand();
  if (grid.empty()) throw InvalidArgument("grid is empty");

  const auto t0 = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.id = check.id;
  rep.description = check.description;
  rep.param_name = check.param_name;
  rep.tolerance = config.tolerance.value_or(check.tolerance);

  const std::vector<double> params = check.params.empty() ? std::vector<double>{0.0} : check.params;
  for (const double p : params) {
    for (const double x : grid) {
      ReportPoint pt;
      pt.input = x;
      pt.param = p;
      pt.tag = format_tag(check, p);
      try {
        const auto [lhs, rhs] = check.sides(x, p, config.opts);
        pt.lhs = lhs;
        pt.rhs = rhs;
        pt.abs_err = std::fabs(lhs - rhs);
        if (!std::isfinite(pt.abs_err)) {
          pt.abs_err = INFINITY;
          pt.error = "non-finite value";
        }
      } catch (const std::exception& e) {
        pt.lhs = NAN;
        pt.rhs = NAN;
        pt.abs_err = INFINITY;
        pt.error = e.what();
      }
      rep.max_abs_err = std::fmax(rep.max_abs_err, pt.abs_err);
      rep.points.push_back(std::move(pt));
    }
  }
  rep.pass = rep.max_abs_err <= rep.tolerance;
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

IdentityReport run_identity(std::string_view id, const RunConfig& config) {
  return run_identity(Registry::builtin(), id, config);
}

std::vector<IdentityReport> run_all(const Registry& registry, const RunConfig& config) {
  RunConfig cfg = config;
  cfg.grid.reset();
  std::vector<IdentityReport> out;
  out.reserve(registry.size());
  for (const auto& check : registry.checks()) out.push_back(run_identity(registry, check.id, cfg));
  return out;
}

std::vector<IdentityReport> run_all(const RunConfig& config) {
  return run_all(Registry::builtin(), config);
}

std::string point_label(const IdentityReport& report, const ReportPoint& point) {
  if (point.tag.empty()) return report.id;
  return report.id + "[" + point.tag + "]";
}

}  // namespace dblgamma
