// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/quadrature.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>

#include "dblgamma/gamma.hpp"
#include "dblgamma/hurwitz.hpp"

namespace dblgamma {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [-1, 1]; odd indices are the 7 Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  int depth = 0;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw IntegrandError("integrand is not finite at x = " + std::to_string(x), x);
  }
  return v;
}

Panel gk15(const std::function<double(double)>& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = checked(f, c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double absk = kWgk[7] * std::fabs(fc);
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = checked(f, c - dx);
    const double f2 = checked(f, c + dx);
    kron += kWgk[i] * (f1 + f2);
    absk += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  Panel p{a, b, kron * h, 0.0, depth};
  p.err = std::fmax(std::fabs((kron - gauss) * h), 50.0 * kEps * absk * std::fabs(h));
  return p;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw InvalidArgument("integrate: requires finite a <= b");
  }
  if (!(tol > 0.0)) throw InvalidArgument("integrate: tol must be positive");
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> open;
  std::vector<Panel> done;  // panels that may not be split further
  const Panel first = gk15(f, a, b, 0);
  out.evaluations = 15;
  open.push(first);
  double total_err = first.err;
  while (total_err > tol && !open.empty() &&
         out.subdivisions < static_cast<std::uint64_t>(kQuadMaxSubdivisions)) {
    const Panel p = open.top();
    open.pop();
    const double m = 0.5 * (p.a + p.b);
    if (p.depth >= kQuadMaxDepth || !(m > p.a && m < p.b)) {
      done.push_back(p);
      continue;
    }
    const Panel left = gk15(f, p.a, m, p.depth + 1);
    const Panel right = gk15(f, m, p.b, p.depth + 1);
    out.evaluations += 30;
    ++out.subdivisions;
    total_err += left.err + right.err - p.err;
    open.push(left);
    open.push(right);
  }
  while (!open.empty()) {
    done.push_back(open.top());
    open.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum value;
  double err = 0.0;
  for (const Panel& p : done) {
    value.add(p.value);
    err += p.err;
  }
  out.value = value.value();
  out.err_estimate = err;
  out.converged = err <= tol;
  return out;
}

NamedIntegrand::NamedIntegrand(IntegrandKind kind, double param, const EvalOptions& opts)
    : kind_(kind), param_(param), inner_(opts.tightened(10.0)) {}

NamedIntegrand NamedIntegrand::make(IntegrandKind kind, double param, const EvalOptions& opts) {
  opts.validate();
  switch (kind) {
    case IntegrandKind::power_log:
      if (!std::isfinite(param) || !(param > -1.0)) {
        throw InvalidArgument("power_log: requires p > -1");
      }
      break;
    case IntegrandKind::zeta_prime:
    case IntegrandKind::zeta_dd:
      if (param != std::nearbyint(param) || param < 1.0 || param > 64.0) {
        throw InvalidArgument("zeta integrands: n must be an integer in [1, 64]");
      }
      break;
    default:
      param = 0.0;
      break;
  }
  return NamedIntegrand(kind, param, opts);
}

NamedIntegrand NamedIntegrand::parse(std::string_view text, const EvalOptions& opts) {
  static constexpr std::pair<std::string_view, IntegrandKind> kNames[] = {
      {"cot_x", IntegrandKind::cot_x},
      {"csc_x", IntegrandKind::csc_x},
      {"log_sin", IntegrandKind::log_sin},
      {"log_gamma_t", IntegrandKind::log_gamma_t},
      {"log_gamma_1p", IntegrandKind::log_gamma_1p},
      {"power_log", IntegrandKind::power_log},
      {"zeta_prime", IntegrandKind::zeta_prime},
      {"zeta_dd", IntegrandKind::zeta_dd},
      {"x_psi", IntegrandKind::x_psi},
  };
  std::string_view name = text;
  std::string_view arg;
  bool has_arg = false;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw InvalidArgument("malformed integrand '" + std::string(text) + "'");
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
    has_arg = true;
  }
  for (const auto& [key, kind] : kNames) {
    if (key != name) continue;
    const bool wants_arg = kind == IntegrandKind::power_log ||
                           kind == IntegrandKind::zeta_prime || kind == IntegrandKind::zeta_dd;
    if (wants_arg != has_arg) {
      throw InvalidArgument("integrand '" + std::string(name) +
                            (wants_arg ? "' needs a parameter" : "' takes no parameter"));
    }
    double param = 0.0;
    if (has_arg) {
      const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), param);
      if (ec != std::errc() || ptr != arg.data() + arg.size()) {
        throw InvalidArgument("bad integrand parameter '" + std::string(arg) + "'");
      }
    }
    return make(kind, param, opts);
  }
  throw InvalidArgument("unknown integrand '" + std::string(text) + "'");
}

std::string NamedIntegrand::name() const {
  switch (kind_) {
    case IntegrandKind::cot_x: return "cot_x";
    case IntegrandKind::csc_x: return "csc_x";
    case IntegrandKind::log_sin: return "log_sin";
    case IntegrandKind::log_gamma_t: return "log_gamma_t";
    case IntegrandKind::log_gamma_1p: return "log_gamma_1p";
    case IntegrandKind::power_log: return "power_log(" + format_param(param_) + ")";
    case IntegrandKind::zeta_prime: return "zeta_prime(" + format_param(param_) + ")";
    case IntegrandKind::zeta_dd: return "zeta_dd(" + format_param(param_) + ")";
    case IntegrandKind::x_psi: return "x_psi";
  }
  return "?";
}

double NamedIntegrand::domain_lo() const {
  switch (kind_) {
    case IntegrandKind::cot_x:
    case IntegrandKind::csc_x:
    case IntegrandKind::log_gamma_1p:
    case IntegrandKind::x_psi:
      return -1.0;
    default:
      return 0.0;
  }
}

double NamedIntegrand::domain_hi() const {
  switch (kind_) {
    case IntegrandKind::cot_x:
    case IntegrandKind::csc_x:
      return 1.0;
    case IntegrandKind::log_sin:
      return kPi;
    default:
      return INFINITY;
  }
}

SeriesValue NamedIntegrand::evaluate(double x) const {
  SeriesValue exact;
  exact.converged = true;
  switch (kind_) {
    case IntegrandKind::cot_x:
      exact.value = x == 0.0 ? 1.0 : kPi * x * std::cos(kPi * x) / std::sin(kPi * x);
      return exact;
    case IntegrandKind::csc_x:
      exact.value = x == 0.0 ? 1.0 : kPi * x / std::sin(kPi * x);
      return exact;
    case IntegrandKind::log_sin:
      exact.value = std::log(std::sin(x));
      return exact;
    case IntegrandKind::log_gamma_t:
      return log_gamma(x, inner_);
    case IntegrandKind::log_gamma_1p:
      return log_gamma(1.0 + x, inner_);
    case IntegrandKind::power_log:
      exact.value = (x == 0.0 && param_ > 0.0) ? 0.0 : std::pow(x, param_) * std::log(x);
      return exact;
    case IntegrandKind::zeta_prime:
      return hurwitz_zeta_sderiv(1, 1.0 - param_, x, inner_);
    case IntegrandKind::zeta_dd:
      return hurwitz_zeta_sderiv(2, 1.0 - param_, x, inner_);
    case IntegrandKind::x_psi: {
      if (x == 0.0) return exact;
      SeriesValue v = digamma(1.0 + x, inner_);
      v.value *= x;
      v.err_estimate *= std::fabs(x);
      return v;
    }
  }
  exact.value = NAN;
  return exact;
}

double NamedIntegrand::operator()(double x) const { return evaluate(x).value; }

QuadratureResult integrate(const NamedIntegrand& f, double a, double b, double tol) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a < f.domain_lo() || b > f.domain_hi()) {
    throw DomainError("integrate: [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] leaves the domain of " + f.name());
  }
  if (f.kind() == IntegrandKind::power_log && f.param() < 0.0 && a == 0.0 && b > 0.0) {
    // x = t^m with m = 1/(p+1) maps x^p log x dx to m^2 log t dt.
    const double m = 1.0 / (f.param() + 1.0);
    return integrate([m](double t) { return t == 0.0 ? 0.0 : m * m * std::log(t); }, 0.0,
                     std::pow(b, f.param() + 1.0), tol);
  }
  double eval_err = 0.0;
  QuadratureResult r = integrate(
      [&f, &eval_err](double x) {
        const SeriesValue v = f.evaluate(x);
        eval_err = std::fmax(eval_err, v.err_estimate);
        return v.value;
      },
      a, b, tol);
  r.err_estimate += eval_err * (b - a);
  return r;
}

double power_log_closed(double p, double u) {
  if (!std::isfinite(p) || !(p > -1.0)) throw DomainError("power_log_closed: requires p > -1");
  if (!std::isfinite(u) || !(u > 0.0)) throw DomainError("power_log_closed: requires u > 0");
  const double q = p + 1.0;
  return std::pow(u, q) * (q * std::log(u) - 1.0) / (q * q);
}

QuadratureResult raabe_numeric(double x, double tol) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("raabe_numeric: requires x >= 0");
  return integrate(NamedIntegrand::make(IntegrandKind::log_gamma_t), x, x + 1.0, tol);
}

}  // namespace dblgamma
