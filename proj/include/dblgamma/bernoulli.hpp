// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dblgamma {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxBernoulliDegree = 32;

/// B_m(x) with exact rational coefficients in ascending powers of x.
struct BernoulliPoly {
  int m = 0;
  std::vector<Rational> coeffs;

  Rational eval(const Rational& x) const;
  /// Exact evaluation at the rational value of x, rounded to double.
  double eval(double x) const;
  /// B_m(0), the Bernoulli number B_m.
  const Rational& constant() const { return coeffs.front(); }
  /// "p/q" (or "p" when q = 1) for coefficient i.
  std::string coeff_string(std::size_t i) const;
};

/// B_m(x) from the finite double sum
///   B_m(x) = sum_{n=0}^{m} 1/(n+1) sum_{k=0}^{n} C(n,k) (-1)^k (k+x)^m,
/// expanded exactly. Throws CapacityError for m outside [0, 32].
BernoulliPoly bernoulli_poly(int m);

/// Exact coefficients (ascending in x) of sum_{k=0}^{n} C(n,k) (-1)^k (k+x)^m.
/// Every coefficient is zero when n > m.
std::vector<Rational> alternating_binomial_power_sum(int n, int m);

/// zeta(1-m, x) = -B_m(x)/m for m >= 1.
double zeta_neg_int(int m, double x);

}  // namespace dblgamma
