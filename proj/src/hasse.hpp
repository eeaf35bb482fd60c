// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

// Internal engine behind the Hurwitz module. The alternating binomial sums
// lose roughly n*log10(2) digits at outer index n, so they are carried in
// binary128 and only the final values are rounded to double.

#include <array>
#include <cstdint>

#include "dblgamma/core_series.hpp"

namespace dblgamma::detail {

using quad = __float128;

inline constexpr int kHasseOuterCap = 400;
/// Arguments below this are moved up with zeta(s,x) = zeta(s,x+1) + x^-s
/// before the double sums are formed.
inline constexpr double kHasseShiftTarget = 16.0;

/// D_j(s, y) = sum_n 1/(n+1) sum_k C(n,k) (-1)^k log^j(k+y) (k+y)^{1-s}
/// for j = 0..jmax, at the given y (no shifting). y is taken in binary128 so
/// that a shifted argument x + M stays exact.
struct HasseSums {
  std::array<quad, 3> d{};
  double err = 0.0;            // bound on |error| of each d[j]
  std::uint64_t terms = 0;     // outer terms used
  bool converged = false;
};

HasseSums hasse_double_sums(double s, quad y, int jmax, const EvalOptions& opts);

/// zeta^{(j)}(s, x) for j = 0..jmax in binary128. Applies the shift, then
/// unwinds the linear relations between D_j and the s-derivatives.
struct HurwitzDerivs {
  std::array<quad, 3> z{};
  double err = 0.0;
  std::uint64_t terms = 0;
  bool converged = false;
};

HurwitzDerivs hurwitz_derivs(double s, double x, int jmax, const EvalOptions& opts);

/// Number of unit shifts applied for argument x.
int shift_count(double x);

/// sum_{k<M} (k+x)^p log^j(k+x), with 0^p log^j 0 read as 0 for p > 0.
quad shifted_power_log_sum(double x, int M, double p, int j);
/// The same for j = 0..jmax in one pass.
std::array<quad, 3> shifted_power_log_sums(double x, int M, double p, int jmax);

}  // namespace dblgamma::detail
