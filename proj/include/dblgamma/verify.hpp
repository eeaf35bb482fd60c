// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

// Executable identity checks. Each registry row pairs two independent
// evaluation paths and compares them over a grid of inputs.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dblgamma/core_series.hpp"

namespace dblgamma {

/// Either an arithmetic range start, start+step, ... <= stop, or an explicit
/// list of points.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
  std::vector<double> points;  // used instead of the range when nonempty

  static GridSpec range(double start, double stop, double step);
  static GridSpec list(std::vector<double> points);
  /// Parses "a:b:step" or a single number "a".
  static GridSpec parse(std::string_view text);

  /// Throws InvalidArgument for a bad range (step <= 0, stop < start,
  /// non-finite bounds, more than 100000 points).
  std::vector<double> expand() const;
};

struct ReportPoint {
  double input = 0.0;
  double param = 0.0;  // meaningful only when the row has a parameter
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;  // infinity when the point errored
  std::string tag;       // "n=2" style parameter label, empty without one
  std::string error;     // empty unless evaluation threw
};

struct IdentityReport {
  std::string id;
  std::string description;
  std::string param_name;  // empty for rows without a parameter
  std::vector<ReportPoint> points;
  double max_abs_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time = 0.0;  // seconds
};

/// (lhs, rhs) at grid point x and parameter value p.
using SidesFn = std::function<std::pair<double, double>(double x, double p, const EvalOptions&)>;

struct IdentityCheck {
  std::string id;
  std::string description;
  GridSpec default_grid;
  double tolerance = 0.0;
  /// When nonempty, every grid point is evaluated once per value in `params`.
  std::string param_name;
  std::vector<double> params;
  /// Optional label for a parameter value; defaults to "<param_name>=<p>".
  std::function<std::string(double)> tag;
  SidesFn sides;
};

class Registry {
 public:
  /// The rows shipped with the library.
  static const Registry& builtin();

  /// Throws InvalidArgument on a duplicate id, an empty id, tolerance <= 0 or
  /// a missing evaluator.
  void add(IdentityCheck check);

  /// Throws UnknownIdentityError.
  const IdentityCheck& find(std::string_view id) const;
  bool contains(std::string_view id) const;

  /// Rows ordered by id.
  const std::vector<IdentityCheck>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }

 private:
  std::vector<IdentityCheck> checks_;
};

struct RunConfig {
  EvalOptions opts;
  std::optional<GridSpec> grid;      // replaces the row's default grid
  std::optional<double> tolerance;   // replaces the row's tolerance
};

/// Evaluates both sides at every grid point. A point whose evaluation throws
/// is recorded with the message and abs_err = inf; the run continues. Points
/// are ordered by parameter, then by grid position.
IdentityReport run_identity(const Registry& registry, std::string_view id,
                            const RunConfig& config = {});
IdentityReport run_identity(std::string_view id, const RunConfig& config = {});

/// Runs every row of `registry` with its default grid, in id order. A grid
/// override in `config` is ignored.
std::vector<IdentityReport> run_all(const Registry& registry, const RunConfig& config = {});
std::vector<IdentityReport> run_all(const RunConfig& config = {});

/// "adamchik_n[n=2]" for parameterized rows, the plain id otherwise.
std::string point_label(const IdentityReport& report, const ReportPoint& point);

}  // namespace dblgamma
