// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

// Summation primitives shared by every series evaluator in the library:
// options, the value-with-error type, a Neumaier accumulator, the stopping
// rule, Euler-Maclaurin tails of sum n^-j, and Euler's constant.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "dblgamma/errors.hpp"

namespace dblgamma {

/// Tolerances and caps governing a series evaluation.
struct EvalOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  std::uint64_t max_terms = 1'000'000;
  /// Number of tail-correction powers applied after truncation.
  int tail_order = 4;
  /// Number of successive small terms required before stopping.
  int consecutive_small = 3;

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;

  /// Copy with abs_tol and rel_tol divided by `factor`.
  EvalOptions tightened(double factor) const;

  double threshold(double partial) const {
    return std::fmax(abs_tol, rel_tol * std::fabs(partial));
  }
};

struct SeriesValue {
  double value = 0.0;
  double err_estimate = 0.0;
  std::uint64_t terms_used = 0;
  bool converged = false;
};

/// Neumaier's variant of Kahan summation. Deterministic for a fixed order of
/// additions.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    abs_ += std::fabs(x);
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + comp_; }
  /// Sum of magnitudes of everything added; scales the rounding bound.
  double magnitude() const { return abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

/// The stopping rule used by sum_until_converged, exposed so that evaluators
/// driving several coupled sums can share it.
class SeriesStopRule {
 public:
  explicit SeriesStopRule(const EvalOptions& opts) : opts_(opts) {}

  /// Feed the magnitude of the newest term and the current partial sum.
  /// Returns true once `consecutive_small` successive terms fell below the
  /// threshold.
  bool feed(double term_magnitude, double partial);

  /// Largest magnitude among the trailing run of small terms; zero if none.
  double trailing_max() const { return trailing_max_; }
  double last_magnitude() const { return last_; }

 private:
  const EvalOptions& opts_;
  int run_ = 0;
  double trailing_max_ = 0.0;
  double last_ = 0.0;
};

namespace detail {
[[noreturn]] void throw_non_finite_term(std::uint64_t index);
}  // namespace detail

/// Sums term(1) + term(2) + ... with compensated accumulation.
///
/// `term` is called with n = 1, 2, 3, ... strictly in order, so stateful
/// generators are allowed. Stops once `consecutive_small` successive terms
/// satisfy |term(n)| < max(abs_tol, rel_tol * |partial|); otherwise returns
/// with converged = false after max_terms terms. The error estimate is the
/// largest of the trailing small terms, or |last term| when not converged.
template <class TermFn>
SeriesValue sum_until_converged(TermFn&& term, const EvalOptions& opts) {
  opts.validate();
  CompensatedSum acc;
  SeriesStopRule rule(opts);
  SeriesValue out;
  for (std::uint64_t n = 1; n <= opts.max_terms; ++n) {
    const double t = static_cast<double>(term(n));
    if (!std::isfinite(t)) detail::throw_non_finite_term(n);
    acc.add(t);
    out.terms_used = n;
    if (rule.feed(std::fabs(t), acc.value())) {
      out.value = acc.value();
      out.err_estimate = rule.trailing_max();
      out.converged = true;
      return out;
    }
  }
  out.value = acc.value();
  out.err_estimate = std::fmax(rule.last_magnitude(), rule.trailing_max());
  out.converged = false;
  return out;
}

/// Sum over n > N of n^-j (j >= 2), by a short explicit run followed by an
/// Euler-Maclaurin remainder. Relative accuracy near machine precision.
double power_tail(int j, std::uint64_t N);

/// log(1+z) minus its Taylor polynomial through z^k. Accurate for small |z|
/// where the direct difference would cancel. Requires z > -1.
double log1p_remainder(double z, int k);

/// Smallest N >= min_n with scale / N^order <= target, capped at `cap`.
std::uint64_t terms_for_tail_bound(double scale, int order, double target,
                                   std::uint64_t min_n, std::uint64_t cap);

/// Euler's constant, stored. Tests keep it honest against euler_gamma().
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// gamma = sum_n [1/n - log(1 + 1/n)] with the tail after N replaced by
/// sum_{j=2}^{tail_order+1} (-1)^j / j * power_tail(j, N).
SeriesValue euler_gamma(const EvalOptions& opts = {});

/// The N-th partial sum of the series for gamma, without tail correction.
double euler_gamma_partial(std::uint64_t N);

/// H_N - log(N+1), the telescoped form of euler_gamma_partial(N).
double harmonic_minus_log(std::uint64_t N);

}  // namespace dblgamma
