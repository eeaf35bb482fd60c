// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/dblgamma.h"

#include <cmath>
#include <limits>
#include <memory>
#include <new>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "dblgamma/barnes.hpp"
#include "dblgamma/bernoulli.hpp"
#include "dblgamma/clausen.hpp"
#include "dblgamma/gamma.hpp"
#include "dblgamma/hurwitz.hpp"
#include "dblgamma/verify.hpp"

struct dg_options {
  dblgamma::EvalOptions opts;
};

struct dg_bernoulli {
  std::vector<std::string> coeffs;
};

struct dg_report_list {
  std::vector<dblgamma::IdentityReport> reports;
  std::vector<std::vector<std::string>> labels;
};

namespace {

using namespace dblgamma;

thread_local std::string g_last_error;

dg_status fail(dg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

dg_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return DG_ERR_DOMAIN;
    case ErrorKind::pole: return DG_ERR_POLE;
    case ErrorKind::non_finite: return DG_ERR_NON_FINITE;
    case ErrorKind::capacity: return DG_ERR_CAPACITY;
    case ErrorKind::unknown_id: return DG_ERR_UNKNOWN_ID;
    case ErrorKind::invalid_argument: return DG_ERR_INVALID_ARGUMENT;
  }
  return DG_ERR_INTERNAL;
}

template <class Fn>
dg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return DG_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DG_ERR_INTERNAL, "unknown exception");
  }
}

const EvalOptions& options_of(const dg_options* opts) {
  static const EvalOptions defaults;
  return opts ? opts->opts : defaults;
}

void store(const SeriesValue& v, dg_series_value* out) {
  out->value = v.value;
  out->err_estimate = v.err_estimate;
  out->terms_used = v.terms_used;
  out->converged = v.converged ? 1 : 0;
}

struct FunctionEntry {
  std::string_view name;
  int arity;
  SeriesValue (*eval)(const double* a, const EvalOptions& o);
};

constexpr FunctionEntry kFunctions[] = {
    {"loggamma", 1, [](const double* a, const EvalOptions& o) { return log_gamma(a[0], o); }},
    {"digamma", 1, [](const double* a, const EvalOptions& o) { return digamma(a[0], o); }},
    {"logbarnes", 1,
     [](const double* a, const EvalOptions& o) { return log_barnes_g1p(a[0], o); }},
    {"hurwitz", 2,
     [](const double* a, const EvalOptions& o) { return hurwitz_zeta(a[0], a[1], o); }},
    {"hurwitz-ds", 2,
     [](const double* a, const EvalOptions& o) {
       return hurwitz_zeta_sderiv(1, a[0], a[1], o);
     }},
    {"hurwitz-dss", 2,
     [](const double* a, const EvalOptions& o) {
       return hurwitz_zeta_sderiv(2, a[0], a[1], o);
     }},
    {"clausen2", 1, [](const double* a, const EvalOptions& o) { return clausen2(a[0], o); }},
};

const FunctionEntry* find_function(const char* name) {
  if (!name) return nullptr;
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const dg_report_list* checked_list(const dg_report_list* list, size_t i) {
  if (!list) throw InvalidArgument("null report list");
  if (i >= list->reports.size()) throw InvalidArgument("report index out of range");
  return list;
}

template <class Setter>
dg_status set_option(dg_options* opts, Setter&& set) {
  if (!opts) return fail(DG_ERR_INVALID_ARGUMENT, "null options");
  return guarded([&] {
    EvalOptions next = opts->opts;
    set(next);
    next.validate();
    opts->opts = next;
  });
}

}  // namespace

extern "C" {

const char* dg_status_string(dg_status status) {
  switch (status) {
    case DG_OK: return "ok";
    case DG_ERR_DOMAIN: return "domain error";
    case DG_ERR_POLE: return "pole";
    case DG_ERR_NON_FINITE: return "non-finite value";
    case DG_ERR_CAPACITY: return "capacity exceeded";
    case DG_ERR_UNKNOWN_ID: return "unknown id";
    case DG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dg_last_error(void) { return g_last_error.c_str(); }

const char* dg_version(void) { return DBLGAMMA_VERSION; }

dg_status dg_options_create(dg_options** out) {
  if (!out) return fail(DG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] { *out = new dg_options{}; });
}

void dg_options_destroy(dg_options* opts) { delete opts; }

dg_status dg_options_set_abs_tol(dg_options* opts, double v) {
  return set_option(opts, [v](EvalOptions& o) { o.abs_tol = v; });
}
dg_status dg_options_set_rel_tol(dg_options* opts, double v) {
  return set_option(opts, [v](EvalOptions& o) { o.rel_tol = v; });
}
dg_status dg_options_set_max_terms(dg_options* opts, uint64_t v) {
  return set_option(opts, [v](EvalOptions& o) { o.max_terms = v; });
}
dg_status dg_options_set_tail_order(dg_options* opts, int v) {
  return set_option(opts, [v](EvalOptions& o) { o.tail_order = v; });
}
dg_status dg_options_set_consecutive_small(dg_options* opts, int v) {
  return set_option(opts, [v](EvalOptions& o) { o.consecutive_small = v; });
}

int dg_eval_arity(const char* function) {
  const FunctionEntry* f = find_function(function);
  return f ? f->arity : -1;
}

dg_status dg_eval(const dg_options* opts, const char* function, const double* args,
                  size_t nargs, dg_series_value* out) {
  if (!out) return fail(DG_ERR_INVALID_ARGUMENT, "null output pointer");
  if (!function) return fail(DG_ERR_INVALID_ARGUMENT, "null function name");
  const FunctionEntry* f = find_function(function);
  if (!f) return fail(DG_ERR_UNKNOWN_ID, "unknown function '" + std::string(function) + "'");
  if (nargs != static_cast<size_t>(f->arity) || (nargs > 0 && !args)) {
    return fail(DG_ERR_INVALID_ARGUMENT, std::string(f->name) + " takes " +
                                             std::to_string(f->arity) + " argument(s)");
  }
  return guarded([&] { store(f->eval(args, options_of(opts)), out); });
}

dg_status dg_constant(const dg_options* opts, const char* name, dg_series_value* out,
                      const char** provenance) {
  if (!out) return fail(DG_ERR_INVALID_ARGUMENT, "null output pointer");
  if (!name) return fail(DG_ERR_INVALID_ARGUMENT, "null constant name");
  const std::string_view n = name;
  return guarded([&] {
    const EvalOptions& o = options_of(opts);
    const char* how = nullptr;
    if (n == "gamma") {
      store(euler_gamma(o), out);
      how = "series sum_n [1/n - log(1 + 1/n)] with Euler-Maclaurin tail correction";
    } else if (n == "zeta-prime-0") {
      store(hurwitz_zeta_sderiv(1, 0.0, 1.0, o), out);
      how = "Hasse series, s-derivative at s = 0, x = 1";
    } else if (n == "zeta-prime-m1") {
      store(hurwitz_zeta_sderiv(1, -1.0, 1.0, o), out);
      how = "Hasse series, s-derivative at s = -1, x = 1";
    } else if (n == "log-g-half") {
      const SeriesValue zp = hurwitz_zeta_sderiv(1, -1.0, 1.0, o);
      SeriesValue v = zp;
      v.value = std::log(2.0) / 24.0 - 0.25 * std::log(std::numbers::pi) + 1.5 * zp.value;
      v.err_estimate = 1.5 * zp.err_estimate + 4.0 * std::numeric_limits<double>::epsilon();
      store(v, out);
      how = "closed form log(2)/24 - log(pi)/4 + (3/2) zeta'(-1), zeta'(-1) from the Hasse series";
    } else {
      throw Error(ErrorKind::unknown_id, "unknown constant '" + std::string(n) + "'");
    }
    if (provenance) *provenance = how;
  });
}

dg_status dg_bernoulli_create(int m, dg_bernoulli** out) {
  if (!out) return fail(DG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const BernoulliPoly b = bernoulli_poly(m);
    auto* h = new dg_bernoulli{};
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) h->coeffs.push_back(b.coeff_string(i));
    *out = h;
  });
}

void dg_bernoulli_destroy(dg_bernoulli* poly) { delete poly; }

size_t dg_bernoulli_size(const dg_bernoulli* poly) { return poly ? poly->coeffs.size() : 0; }

const char* dg_bernoulli_coeff(const dg_bernoulli* poly, size_t i) {
  if (!poly || i >= poly->coeffs.size()) return nullptr;
  return poly->coeffs[i].c_str();
}

size_t dg_identity_count(void) { return Registry::builtin().size(); }

const char* dg_identity_id(size_t i) {
  const auto& rows = Registry::builtin().checks();
  return i < rows.size() ? rows[i].id.c_str() : nullptr;
}

const char* dg_identity_description(size_t i) {
  const auto& rows = Registry::builtin().checks();
  return i < rows.size() ? rows[i].description.c_str() : nullptr;
}

dg_status dg_verify_run(const dg_options* opts, const char* id, const char* grid,
                        double tolerance, dg_report_list** out) {
  if (!out || !id) return fail(DG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    RunConfig cfg;
    cfg.opts = options_of(opts);
    if (!std::isfinite(tolerance)) throw InvalidArgument("tolerance must be finite");
    if (tolerance > 0.0) cfg.tolerance = tolerance;
    const std::string_view which = id;
    auto list = std::make_unique<dg_report_list>();
    if (which == "all") {
      if (grid) throw InvalidArgument("a grid cannot be combined with 'all'");
      list->reports = run_all(cfg);
    } else {
      if (grid) cfg.grid = GridSpec::parse(grid);
      list->reports.push_back(run_identity(which, cfg));
    }
    for (const auto& r : list->reports) {
      std::vector<std::string> labels;
      labels.reserve(r.points.size());
      for (const auto& p : r.points) labels.push_back(point_label(r, p));
      list->labels.push_back(std::move(labels));
    }
    *out = list.release();
  });
}

void dg_report_list_destroy(dg_report_list* list) { delete list; }

size_t dg_report_count(const dg_report_list* list) { return list ? list->reports.size() : 0; }

int dg_report_all_pass(const dg_report_list* list) {
  if (!list) return 0;
  for (const auto& r : list->reports) {
    if (!r.pass) return 0;
  }
  return 1;
}

dg_status dg_report_get(const dg_report_list* list, size_t i, dg_report_info* out) {
  if (!out) return fail(DG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto& r = checked_list(list, i)->reports[i];
    out->id = r.id.c_str();
    out->description = r.description.c_str();
    out->param_name = r.param_name.c_str();
    out->max_abs_err = r.max_abs_err;
    out->tolerance = r.tolerance;
    out->pass = r.pass ? 1 : 0;
    out->wall_time = r.wall_time;
    out->point_count = r.points.size();
  });
}

dg_status dg_report_point(const dg_report_list* list, size_t i, size_t k, dg_point_info* out) {
  if (!out) return fail(DG_ERR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto& r = checked_list(list, i)->reports[i];
    if (k >= r.points.size()) throw InvalidArgument("point index out of range");
    const auto& p = r.points[k];
    out->label = list->labels[i][k].c_str();
    out->input = p.input;
    out->param = p.param;
    out->lhs = p.lhs;
    out->rhs = p.rhs;
    out->abs_err = p.abs_err;
    out->error = p.error.empty() ? nullptr : p.error.c_str();
  });
}

}  // extern "C"
