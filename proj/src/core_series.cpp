// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/core_series.hpp"

#include <algorithm>
#include <array>

namespace dblgamma {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::non_finite: return "non_finite";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::unknown_id: return "unknown_id";
    case ErrorKind::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

void EvalOptions::validate() const {
  if (!(abs_tol > 0.0)) throw InvalidArgument("abs_tol must be > 0");
  if (!(rel_tol >= 0.0)) throw InvalidArgument("rel_tol must be >= 0");
  if (max_terms < 1) throw InvalidArgument("max_terms must be >= 1");
  if (tail_order < 0 || tail_order > 8) throw InvalidArgument("tail_order must be in [0, 8]");
  if (consecutive_small < 1) throw InvalidArgument("consecutive_small must be >= 1");
}

EvalOptions EvalOptions::tightened(double factor) const {
  EvalOptions o = *this;
  o.abs_tol = abs_tol / factor;
  o.rel_tol = rel_tol / factor;
  return o;
}

bool SeriesStopRule::feed(double term_magnitude, double partial) {
  last_ = term_magnitude;
  if (term_magnitude < opts_.threshold(partial)) {
    trailing_max_ = run_ == 0 ? term_magnitude : std::fmax(trailing_max_, term_magnitude);
    ++run_;
  } else {
    run_ = 0;
    trailing_max_ = 0.0;
  }
  return run_ >= opts_.consecutive_small;
}

namespace detail {
void throw_non_finite_term(std::uint64_t index) {
  throw EvaluationError("series term " + std::to_string(index) + " is not finite", index);
}
}  // namespace detail

double power_tail(int j, std::uint64_t N) {
  if (j < 2) throw DomainError("power_tail requires j >= 2");
  // Explicit terms until the Euler-Maclaurin start point is comfortably large
  // compared with j.
  const std::uint64_t start = std::max<std::uint64_t>(N, 64 + 4 * static_cast<std::uint64_t>(j));
  CompensatedSum acc;
  for (std::uint64_t n = start; n > N; --n) acc.add(std::pow(static_cast<double>(n), -j));

  // sum_{n>M} n^-j = M^{1-j}/(j-1) - M^{-j}/2
  //                  + sum_k B_{2k}/(2k)! * j(j+1)...(j+2k-2) * M^{-j-2k+1}
  static constexpr std::array<double, 6> kB2kOverFact = {
      1.0 / 12.0,           // B2/2!
      -1.0 / 720.0,         // B4/4!
      1.0 / 30240.0,        // B6/6!
      -1.0 / 1209600.0,     // B8/8!
      1.0 / 47900160.0,     // B10/10!
      -691.0 / 1307674368000.0,  // B12/12!
  };
  const double M = static_cast<double>(start);
  const double Mj = std::pow(M, -j);
  double rem = M * Mj / (j - 1) - 0.5 * Mj;
  double rising = j;  // j (j+1) ... (j + 2k - 2)
  double pw = Mj / M;  // M^{-j-1}
  for (std::size_t k = 0; k < kB2kOverFact.size(); ++k) {
    rem += kB2kOverFact[k] * rising * pw;
    rising *= (j + 2.0 * k + 1) * (j + 2.0 * k + 2);
    pw /= M * M;
  }
  acc.add(rem);
  return acc.value();
}

double log1p_remainder(double z, int k) {
  if (!(z > -1.0)) throw DomainError("log1p_remainder requires z > -1");
  if (std::fabs(z) <= 0.25) {
    // sum_{i>k} (-1)^{i+1} z^i / i
    double zi = std::pow(z, k + 1);
    double sum = 0.0;
    for (int i = k + 1; i < k + 200; ++i) {
      const double t = ((i % 2 == 1) ? zi : -zi) / i;
      sum += t;
      if (std::fabs(t) <= 1e-18 * std::fabs(sum)) break;
      zi *= z;
    }
    return sum;
  }
  double poly = 0.0;
  double zi = z;
  for (int i = 1; i <= k; ++i) {
    poly += ((i % 2 == 1) ? zi : -zi) / i;
    zi *= z;
  }
  return std::log1p(z) - poly;
}

std::uint64_t terms_for_tail_bound(double scale, int order, double target,
                                   std::uint64_t min_n, std::uint64_t cap) {
  if (order <= 0 || scale <= 0.0) return std::min(min_n, cap);
  const double n = std::ceil(std::pow(scale / target, 1.0 / order));
  if (!(n < static_cast<double>(cap))) return cap;
  return std::clamp<std::uint64_t>(static_cast<std::uint64_t>(n), min_n, cap);
}

double euler_gamma_partial(std::uint64_t N) {
  CompensatedSum acc;
  // 1/n - log(1+1/n) = -(log1p(1/n) - 1/n)
  for (std::uint64_t n = 1; n <= N; ++n) {
    acc.add(-log1p_remainder(1.0 / static_cast<double>(n), 1));
  }
  return acc.value();
}

double harmonic_minus_log(std::uint64_t N) {
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= N; ++n) acc.add(1.0 / static_cast<double>(n));
  acc.add(-std::log(static_cast<double>(N) + 1.0));
  return acc.value();
}

SeriesValue euler_gamma(const EvalOptions& opts) {
  opts.validate();
  const int J = 1 + opts.tail_order;  // highest power corrected
  SeriesValue out;
  if (opts.tail_order == 0) {
    // Uncorrected tail is bounded by 1/(2N).
    const std::uint64_t N =
        terms_for_tail_bound(0.5, 1, opts.abs_tol, 1, opts.max_terms);
    out.value = euler_gamma_partial(N);
    out.terms_used = N;
    out.err_estimate = 0.5 / static_cast<double>(N);
    out.converged = out.err_estimate <= opts.abs_tol;
    return out;
  }
  // Neglected tail after correcting through power J is below
  // power_tail(J+1, N)/(J+1) <= 1/((J+1) J N^J).
  const double scale = 1.0 / ((J + 1.0) * J);
  const std::uint64_t N = terms_for_tail_bound(scale, J, 0.25 * opts.abs_tol,
                                               16, opts.max_terms);
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= N; ++n) {
    acc.add(-log1p_remainder(1.0 / static_cast<double>(n), 1));
  }
  for (int j = 2; j <= J; ++j) {
    const double c = ((j % 2 == 0) ? 1.0 : -1.0) / j;
    acc.add(c * power_tail(j, N));
  }
  out.value = acc.value();
  out.terms_used = N;
  out.err_estimate = scale * std::pow(static_cast<double>(N), -J) +
                     4.0 * std::numeric_limits<double>::epsilon() * std::fabs(out.value);
  out.converged = out.err_estimate <= std::fmax(opts.abs_tol, opts.rel_tol * std::fabs(out.value));
  return out;
}

}  // namespace dblgamma
