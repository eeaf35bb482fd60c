// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration and the integrands that
// appear in the integral identities checked by the verify module.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dblgamma/core_series.hpp"

namespace dblgamma {

/// Panels are never bisected more than this many times.
inline constexpr int kQuadMaxDepth = 60;
/// Upper bound on the number of bisections in one integration.
inline constexpr int kQuadMaxSubdivisions = 4000;

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t subdivisions = 0;
  bool converged = false;
};

/// Integrates f over [a, b] to absolute tolerance `tol`.
///
/// The Kronrod rule has interior nodes only, so f is never called at a or b
/// and integrable endpoint singularities are fine. The panel with the largest
/// error estimate |K15 - G7| is bisected until the summed estimate is at most
/// `tol`. Panel values are added in left-to-right order, so the result does
/// not depend on the refinement history. Throws IntegrandError when f returns
/// a non-finite value.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol);

enum class IntegrandKind {
  cot_x,         // pi x cot(pi x), 1 at x = 0
  csc_x,         // pi x / sin(pi x), 1 at x = 0
  log_sin,       // log sin x on (0, pi)
  log_gamma_t,   // log Gamma(t), t > 0
  log_gamma_1p,  // log Gamma(1 + x), x > -1
  power_log,     // x^p log x, p > -1; 0 at x = 0 when p > 0
  zeta_prime,    // zeta'(1 - n, u), u > 0
  zeta_dd,       // zeta''(1 - n, u), u > 0
  x_psi,         // x psi(1 + x), x > -1
};

/// One of the fixed integrands, with its parameter (p or n) when it has one.
class NamedIntegrand {
 public:
  /// Parses "cot_x", "power_log(1.5)", "zeta_prime(2)" and so on. Throws
  /// InvalidArgument on unknown names or malformed parameters.
  static NamedIntegrand parse(std::string_view text, const EvalOptions& opts = {});
  static NamedIntegrand make(IntegrandKind kind, double param = 0.0,
                             const EvalOptions& opts = {});

  IntegrandKind kind() const { return kind_; }
  double param() const { return param_; }
  std::string name() const;

  /// Open interval on which the integrand is defined.
  double domain_lo() const;
  double domain_hi() const;

  /// Value at x, with the limit supplied at removable singularities. Special
  /// function integrands use the construction options tightened by 10.
  double operator()(double x) const;
  /// Value with the evaluator's own error estimate; zero for elementary
  /// integrands.
  SeriesValue evaluate(double x) const;

 private:
  NamedIntegrand(IntegrandKind kind, double param, const EvalOptions& opts);
  IntegrandKind kind_;
  double param_;
  EvalOptions inner_;
};

/// Checks a <= b and that [a, b] lies in the closure of the integrand's
/// domain, then integrates. The error estimate adds the largest evaluation
/// error seen times (b - a) to the quadrature estimate. power_log(p) with
/// p < 0 on [0, b] is integrated after the substitution x = t^(1/(p+1)).
QuadratureResult integrate(const NamedIntegrand& f, double a, double b, double tol);

/// int_0^u x^p log x dx = u^{p+1} [(p+1) log u - 1] / (p+1)^2, p > -1, u > 0.
double power_log_closed(double p, double u);

/// int_x^{x+1} log Gamma(t) dt by quadrature, x >= 0.
QuadratureResult raabe_numeric(double x, double tol);

}  // namespace dblgamma
