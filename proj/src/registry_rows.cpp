// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "registry_rows.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "dblgamma/barnes.hpp"
#include "dblgamma/bernoulli.hpp"
#include "dblgamma/clausen.hpp"
#include "dblgamma/gamma.hpp"
#include "dblgamma/hurwitz.hpp"
#include "dblgamma/quadrature.hpp"

namespace dblgamma::detail {
namespace {

using Sides = std::pair<double, double>;
constexpr double kPi = std::numbers::pi;

// Quadrature targets are fixed per row and independent of any tolerance
// override, so forcing a tiny tolerance changes the verdict but not the work.
constexpr double kQuadElementary = 1e-11;
constexpr double kQuadZetaPrime = 1e-10;
constexpr double kQuadZetaDD = 1e-9;

double quad(IntegrandKind kind, double param, double a, double b, double tol,
            const EvalOptions& opts) {
  const auto f = NamedIntegrand::make(kind, param, opts);
  if (a <= b) return integrate(f, a, b, tol).value;
  return -integrate(f, b, a, tol).value;
}

int as_int(double v, const char* what) {
  if (v != std::nearbyint(v) || std::fabs(v) > 1e6) {
    throw DomainError(std::string(what) + " must be an integer");
  }
  return static_cast<int>(v);
}

std::vector<double> ints(int lo, int hi) {
  std::vector<double> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

IdentityCheck row(std::string id, std::string description, GridSpec grid, double tol,
                  SidesFn sides) {
  IdentityCheck c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.default_grid = std::move(grid);
  c.tolerance = tol;
  c.sides = std::move(sides);
  return c;
}

IdentityCheck with_params(IdentityCheck c, std::string name, std::vector<double> params) {
  c.param_name = std::move(name);
  c.params = std::move(params);
  return c;
}

}  // namespace

std::vector<IdentityCheck> builtin_rows() {
  std::vector<IdentityCheck> rows;
  const auto range = GridSpec::range;
  const auto list = GridSpec::list;

  rows.push_back(row(
      "raabe", "int_x^{x+1} log Gamma(t) dt by quadrature vs x log x - x + log(2 pi)/2",
      list({0.0, 0.5, 1.0, 2.0}), 1e-9, [](double x, double, const EvalOptions& o) {
        return Sides{quad(IntegrandKind::log_gamma_t, 0, x, x + 1.0, kQuadElementary, o),
                     raabe_closed(x)};
      }));

  rows.push_back(row(
      "kinkelin", "int_0^u pi x cot(pi x) dx by quadrature vs u log(2 pi) + log G(1-u) - log G(1+u)",
      range(0.05, 0.90, 0.05), 1e-8, [](double u, double, const EvalOptions& o) {
        return Sides{quad(IntegrandKind::cot_x, 0, 0.0, u, kQuadElementary, o),
                     kinkelin_closed(u, o)};
      }));

  rows.push_back(row(
      "alexeiewsky", "int_0^u log Gamma(1+x) dx by quadrature vs its closed form in Gamma and G",
      range(0.25, 2.0, 0.25), 1e-8, [](double u, double, const EvalOptions& o) {
        return Sides{quad(IntegrandKind::log_gamma_1p, 0, 0.0, u, kQuadElementary, o),
                     alexeiewsky_rhs(u, o)};
      }));

  rows.push_back(row("g_recurrence", "log G(1+x) - log G(x) vs log Gamma(x)",
                     range(0.1, 3.0, 0.1), 1e-9, [](double x, double, const EvalOptions& o) {
                       return Sides{log_barnes_g1p(x, o).value - log_barnes_g1p(x - 1.0, o).value,
                                    log_gamma(x, o).value};
                     }));

  rows.push_back(row("reflection", "log Gamma(u) + log Gamma(1-u) vs log(pi / sin(pi u))",
                     range(0.05, 0.95, 0.05), 1e-10, [](double u, double, const EvalOptions& o) {
                       return Sides{log_gamma(u, o).value + log_gamma(1.0 - u, o).value,
                                    std::log(kPi / std::sin(kPi * u))};
                     }));

  rows.push_back(row("psi_reflection", "psi(u) - psi(1-u) vs -pi cot(pi u)",
                     range(0.1, 0.9, 0.1), 1e-9, [](double u, double, const EvalOptions& o) {
                       return Sides{digamma(u, o).value - digamma(1.0 - u, o).value,
                                    -kPi * std::cos(kPi * u) / std::sin(kPi * u)};
                     }));

  rows.push_back(row(
      "cot_decomp", "pi x cot(pi x) vs 1 + 2 x^2 sum_n 1/(x^2 - n^2)",
      list({-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9}), 1e-9,
      [](double x, double, const EvalOptions& o) {
        const double lhs = x == 0.0 ? 1.0 : kPi * x * std::cos(kPi * x) / std::sin(kPi * x);
        return Sides{lhs, cot_partial_fractions(x, o).value};
      }));

  rows.push_back(row("sine_product",
                     "sum_n log(1 - u^2/n^2) with tail correction vs log(sin(pi u) / (pi u))",
                     range(0.1, 0.9, 0.1), 1e-10, [](double u, double, const EvalOptions& o) {
                       return Sides{sine_log_product(u, o).value,
                                    std::log(std::sin(kPi * u) / (kPi * u))};
                     }));

  rows.push_back(row("lerch", "Hasse zeta'(0, x) vs log Gamma(x) - log(2 pi)/2",
                     range(0.1, 3.0, 0.1), 1e-8, [](double x, double, const EvalOptions& o) {
                       return Sides{hurwitz_zeta_sderiv(1, 0.0, x, o).value,
                                    lerch_zeta_prime0(x, o)};
                     }));

  rows.push_back(row("gosper_vardi", "log G(1+x) - x log Gamma(x) vs zeta'(-1) - zeta'(-1, x)",
                     range(0.1, 2.0, 0.1), 1e-8, [](double x, double, const EvalOptions& o) {
                       return Sides{gosper_vardi_lhs(x, o), gosper_vardi_rhs(x, o)};
                     }));

  rows.push_back(with_params(
      row("bernoulli_zeta", "Hasse zeta(1-m, x) vs -B_m(x)/m", range(0.25, 2.0, 0.25), 1e-8,
          [](double x, double m, const EvalOptions& o) {
            return Sides{hurwitz_zeta(1.0 - m, x, o).value, zeta_neg_int(as_int(m, "m"), x)};
          }),
      "m", ints(1, 6)));

  rows.push_back(with_params(
      row("half_relation",
          "zeta(s, 1/2) vs (2^s - 1) zeta(s); with deriv=1 the s-derivative of both sides",
          list({-2.0, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0}), 1e-8,
          [](double s, double d, const EvalOptions& o) {
            return zeta_half_relation(s, d != 0.0, o);
          }),
      "deriv", {0.0, 1.0}));

  rows.push_back(with_params(
      row("adamchik_n", "n int_0^x zeta'(1-n, u) du by quadrature vs its Bernoulli/zeta' closed form",
          list({0.5, 1.0, 1.5, 2.0}), 1e-7,
          [](double x, double n, const EvalOptions& o) {
            const int k = as_int(n, "n");
            return Sides{n * quad(IntegrandKind::zeta_prime, n, 0.0, x, kQuadZetaPrime, o),
                         adamchik_rhs(k, x, o)};
          }),
      "n", ints(1, 4)));

  rows.push_back(with_params(
      row("adamchik_dd_n",
          "n int_1^x zeta''(1-n, u) du by quadrature vs its closed form in zeta'' and zeta'",
          list({0.5, 1.0, 1.5, 2.0}), 1e-6,
          [](double x, double n, const EvalOptions& o) {
            const int k = as_int(n, "n");
            return Sides{n * quad(IntegrandKind::zeta_dd, n, 1.0, x, kQuadZetaDD, o),
                         adamchik_dd_rhs(k, x, o)};
          }),
      "n", ints(1, 3)));

  rows.push_back(with_params(
      row("unit_integral_zero", "int_0^1 zeta^(j)(1-n, u) du vs 0, input n, for j = 1 and 2",
          list({1.0, 2.0, 3.0, 4.0}), 1e-8,
          [](double n, double j, const EvalOptions& o) {
            as_int(n, "n");
            const auto kind = j == 1.0 ? IntegrandKind::zeta_prime : IntegrandKind::zeta_dd;
            const double tol = j == 1.0 ? kQuadZetaPrime : kQuadZetaDD;
            return Sides{quad(kind, n, 0.0, 1.0, tol, o), 0.0};
          }),
      "j", {1.0, 2.0}));

  rows.push_back(row(
      "zeta_dd0_integral",
      "int_0^x zeta''(0, u) du by quadrature vs its closed form in zeta''(-1, x), Gamma and G",
      range(0.25, 2.0, 0.25), 1e-6, [](double x, double, const EvalOptions& o) {
        return Sides{quad(IntegrandKind::zeta_dd, 1, 0.0, x, kQuadZetaDD, o),
                     zeta_dd0_integral_rhs(x, o)};
      }));

  rows.push_back(row("fourier_kinkelin",
                     "u log(2 sin(pi u)) + Cl2(2 pi u)/(2 pi) vs the G closed form of Kinkelin's integral",
                     range(0.05, 0.90, 0.05), 1e-9, [](double u, double, const EvalOptions& o) {
                       return Sides{fourier_kinkelin(u, o), kinkelin_closed(u, o)};
                     }));

  rows.push_back(row(
      "clausen_barnes", "Cl2(2 pi u)/(2 pi) vs u log[Gamma(u) Gamma(1-u)] - log[G(1+u)/G(1-u)]",
      range(0.05, 0.95, 0.05), 1e-8, [](double u, double, const EvalOptions& o) {
        return Sides{clausen2(2.0 * kPi * u, o).value / (2.0 * kPi), clausen_barnes_rhs(u, o)};
      }));

  rows.push_back(row("f_symmetry",
                     "f(u) vs f(1-u) for f(u) = Cl2(pi u)/pi + (1-u) log Gamma(u) + log G(u)",
                     range(0.1, 0.9, 0.1), 1e-8, [](double u, double, const EvalOptions& o) {
                       return Sides{clausen_f(u, o), clausen_f(1.0 - u, o)};
                     }));

  rows.push_back(row("zeta_reflect", "Cl2(2 pi u)/(2 pi) vs zeta'(-1, u) - zeta'(-1, 1-u)",
                     range(0.05, 0.95, 0.05), 1e-8, [](double u, double, const EvalOptions& o) {
                       return zeta_prime_reflection(u, o);
                     }));

  rows.push_back(row("wang", "int_0^u pi x / sin(pi x) dx by quadrature vs its closed form in G",
                     range(0.05, 0.90, 0.05), 1e-8, [](double u, double, const EvalOptions& o) {
                       return Sides{quad(IntegrandKind::csc_x, 0, 0.0, u, kQuadElementary, o),
                                    wang_closed(u, o)};
                     }));

  rows.push_back(row(
      "csc_series", "odd-harmonic Fourier series of int_0^u pi x / sin(pi x) dx vs quadrature",
      range(0.05, 0.90, 0.05), 1e-7, [](double u, double, const EvalOptions& o) {
        return Sides{cosecant_series_integral(u, o),
                     quad(IntegrandKind::csc_x, 0, 0.0, u, kQuadElementary, o)};
      }));

  rows.push_back(row("hasse_loggamma", "log Gamma(x) from the Hasse double sum vs the Weierstrass series",
                     range(0.1, 3.0, 0.1), 1e-8, [](double x, double, const EvalOptions& o) {
                       return Sides{log_gamma_hasse(x, o).value, log_gamma(x, o).value};
                     }));

  rows.push_back(row("hasse_logbarnes",
                     "log G(1+x) from the Hasse double sum vs the defining series",
                     range(0.1, 2.0, 0.1), 1e-8, [](double x, double, const EvalOptions& o) {
                       return Sides{log_barnes_hasse(x, o).value, log_barnes_g1p(x, o).value};
                     }));

  IdentityCheck limit = with_params(
      row("limit_at_zero", "zeta^(j)(-m, x) - (-1)^j x^m log^j x vs zeta^(j)(-m) as x -> 0+",
          list({1e-3, 1e-4, 1e-5, 1e-6}), 1e-3,
          [](double x, double code, const EvalOptions& o) {
            const int c = as_int(code, "code");
            const int j = c / 10;
            const int m = c % 10;
            return Sides{zeta_limit_at_zero(j, m, x, o).value, zeta_deriv_constant(j, m)};
          }),
      "jm", {1, 2, 11, 12, 21, 22});
  limit.tag = [](double code) {
    const int c = static_cast<int>(code);
    char buf[32];
    std::snprintf(buf, sizeof buf, "j=%d,m=%d", c / 10, c % 10);
    return std::string(buf);
  };
  rows.push_back(std::move(limit));

  return rows;
}

}  // namespace dblgamma::detail
