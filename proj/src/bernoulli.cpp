// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/bernoulli.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <optional>

#include "dblgamma/errors.hpp"

namespace dblgamma {
namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

cpp_int ipow(int base, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<Rational> alternating_binomial_power_sum(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("alternating_binomial_power_sum: n, m must be >= 0");
  // (k+x)^m = sum_i C(m,i) k^{m-i} x^i
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    cpp_int acc = 0;
    for (int k = 0; k <= n; ++k) {
      cpp_int t = binomial(n, k) * ipow(k, m - i);  // 0^0 == 1
      if (k % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    out[static_cast<std::size_t>(i)] = Rational(acc * binomial(m, i));
  }
  return out;
}

BernoulliPoly bernoulli_poly(int m) {
  if (m < 0 || m > kMaxBernoulliDegree) {
    throw CapacityError("bernoulli_poly: degree must be in [0, 32], got " + std::to_string(m));
  }
  static std::array<std::optional<BernoulliPoly>, kMaxBernoulliDegree + 1> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (cache[static_cast<std::size_t>(m)]) return *cache[static_cast<std::size_t>(m)];
  }
  BernoulliPoly p;
  p.m = m;
  p.coeffs.assign(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int n = 0; n <= m; ++n) {
    const auto inner = alternating_binomial_power_sum(n, m);
    for (int i = 0; i <= m; ++i) {
      p.coeffs[static_cast<std::size_t>(i)] += inner[static_cast<std::size_t>(i)] / (n + 1);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[static_cast<std::size_t>(m)] = p;
  return p;
}

Rational BernoulliPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double BernoulliPoly::eval(double x) const {
  // A finite double is an exact dyadic rational; evaluate exactly, round once.
  if (std::isfinite(x)) return static_cast<double>(eval(Rational(x)));
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc;
}

std::string BernoulliPoly::coeff_string(std::size_t i) const {
  const Rational& c = coeffs.at(i);
  const auto num = boost::multiprecision::numerator(c);
  const auto den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double zeta_neg_int(int m, double x) {
  if (m < 1) throw DomainError("zeta_neg_int: requires m >= 1");
  return -bernoulli_poly(m).eval(x) / m;
}

}  // namespace dblgamma
