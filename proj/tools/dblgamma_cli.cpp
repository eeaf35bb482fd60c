// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

// Command-line front end over the dblgamma C interface.
//
// Exit codes: 0 success (all identities pass), 1 an identity failed,
// 2 usage, domain or I/O error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dblgamma/dblgamma.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OptionsDeleter {
  void operator()(dg_options* p) const { dg_options_destroy(p); }
};
struct ReportsDeleter {
  void operator()(dg_report_list* p) const { dg_report_list_destroy(p); }
};
struct BernoulliDeleter {
  void operator()(dg_bernoulli* p) const { dg_bernoulli_destroy(p); }
};
using OptionsPtr = std::unique_ptr<dg_options, OptionsDeleter>;
using ReportsPtr = std::unique_ptr<dg_report_list, ReportsDeleter>;
using BernoulliPtr = std::unique_ptr<dg_bernoulli, BernoulliDeleter>;

// Carries a diagnostic to main, which prints it and exits with kExitUsage.
struct UsageError {
  std::string message;
};

void check(dg_status status) {
  if (status != DG_OK) {
    throw UsageError{std::string(dg_status_string(status)) + ": " + dg_last_error()};
  }
}

// Shortest form of at most 17 significant digits that reads back as v.
std::string fmt17(double v) {
  char buf[40];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    if (!std::isfinite(v) || std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// Non-finite values have no JSON literal.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string function;
  std::vector<double> args;
  std::optional<double> tol;
  std::optional<std::uint64_t> max_terms;
  bool json = false;
};

OptionsPtr make_options(const std::optional<double>& tol,
                        const std::optional<std::uint64_t>& max_terms) {
  dg_options* raw = nullptr;
  check(dg_options_create(&raw));
  OptionsPtr opts(raw);
  if (tol) check(dg_options_set_abs_tol(opts.get(), *tol));
  if (max_terms) check(dg_options_set_max_terms(opts.get(), *max_terms));
  return opts;
}

int run_eval(const EvalArgs& a) {
  const int arity = dg_eval_arity(a.function.c_str());
  if (arity < 0) throw UsageError{"unknown function '" + a.function + "'"};
  if (static_cast<std::size_t>(arity) != a.args.size()) {
    throw UsageError{a.function + " takes " + std::to_string(arity) + " argument(s), got " +
                     std::to_string(a.args.size())};
  }
  const OptionsPtr opts = make_options(a.tol, a.max_terms);
  dg_series_value v{};
  check(dg_eval(opts.get(), a.function.c_str(), a.args.data(), a.args.size(), &v));
  if (a.json) {
    json out = {{"function", a.function},
                {"args", a.args},
                {"value", number(v.value)},
                {"err_estimate", number(v.err_estimate)},
                {"terms_used", v.terms_used},
                {"converged", v.converged != 0}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "value        " << fmt17(v.value) << "\n"
              << "err_estimate " << fmt17(v.err_estimate) << "\n"
              << "terms_used   " << v.terms_used << "\n"
              << "converged    " << (v.converged ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- const

int run_const(const std::string& name, bool as_json) {
  dg_series_value v{};
  const char* how = nullptr;
  check(dg_constant(nullptr, name.c_str(), &v, &how));
  if (as_json) {
    json out = {{"name", name},
                {"value", number(v.value)},
                {"err_estimate", number(v.err_estimate)},
                {"provenance", how ? how : ""}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << name << " = " << fmt17(v.value) << "\n"
              << "err_estimate " << fmt17(v.err_estimate) << "\n"
              << "provenance   " << (how ? how : "") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bernoulli

int run_bernoulli(int m) {
  dg_bernoulli* raw = nullptr;
  check(dg_bernoulli_create(m, &raw));
  const BernoulliPtr poly(raw);
  std::cout << "[";
  for (std::size_t i = 0; i < dg_bernoulli_size(poly.get()); ++i) {
    if (i) std::cout << ", ";
    std::cout << dg_bernoulli_coeff(poly.get(), i);
  }
  std::cout << "]\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string id = "all";
  std::optional<std::string> grid;
  std::optional<double> tol;
  bool json = false;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
};

json reports_json(const dg_report_list* list) {
  json arr = json::array();
  for (std::size_t i = 0; i < dg_report_count(list); ++i) {
    dg_report_info info{};
    check(dg_report_get(list, i, &info));
    json points = json::array();
    for (std::size_t k = 0; k < info.point_count; ++k) {
      dg_point_info p{};
      check(dg_report_point(list, i, k, &p));
      json jp = {{"label", p.label},
                 {"input", number(p.input)},
                 {"lhs", number(p.lhs)},
                 {"rhs", number(p.rhs)},
                 {"abs_err", number(p.abs_err)}};
      if (*info.param_name) jp["param"] = number(p.param);
      if (p.error) jp["error"] = p.error;
      points.push_back(std::move(jp));
    }
    arr.push_back({{"id", info.id},
                   {"points", std::move(points)},
                   {"max_abs_err", number(info.max_abs_err)},
                   {"tolerance", number(info.tolerance)},
                   {"pass", info.pass != 0},
                   {"wall_time", info.wall_time}});
  }
  return arr;
}

void write_csv(const dg_report_list* list, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError{"cannot open '" + path + "' for writing"};
  out << "identity_id,input,lhs,rhs,abs_err\n";
  for (std::size_t i = 0; i < dg_report_count(list); ++i) {
    dg_report_info info{};
    check(dg_report_get(list, i, &info));
    for (std::size_t k = 0; k < info.point_count; ++k) {
      dg_point_info p{};
      check(dg_report_point(list, i, k, &p));
      out << csv_field(p.label) << ',' << fmt17(p.input) << ',' << fmt17(p.lhs) << ','
          << fmt17(p.rhs) << ',' << fmt17(p.abs_err) << '\n';
    }
  }
  if (!out.flush()) throw UsageError{"write to '" + path + "' failed"};
}

void write_json(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError{"cannot open '" + path + "' for writing"};
  out << doc.dump(2) << "\n";
  if (!out.flush()) throw UsageError{"write to '" + path + "' failed"};
}

void print_summary(const dg_report_list* list) {
  for (std::size_t i = 0; i < dg_report_count(list); ++i) {
    dg_report_info info{};
    check(dg_report_get(list, i, &info));
    std::cout << (info.pass ? "PASS " : "FAIL ") << info.id << "  max_abs_err "
              << fmt17(info.max_abs_err) << "  tolerance " << fmt17(info.tolerance) << "  points "
              << info.point_count << "  wall_time " << fmt17(info.wall_time) << "\n";
    if (info.pass) continue;
    for (std::size_t k = 0; k < info.point_count; ++k) {
      dg_point_info p{};
      check(dg_report_point(list, i, k, &p));
      if (p.error) {
        std::cerr << "  " << p.label << " at " << fmt17(p.input) << ": " << p.error << "\n";
      }
    }
  }
}

int run_verify(const VerifyArgs& a) {
  dg_report_list* raw = nullptr;
  check(dg_verify_run(nullptr, a.id.c_str(), a.grid ? a.grid->c_str() : nullptr,
                      a.tol.value_or(0.0), &raw));
  const ReportsPtr list(raw);
  if (a.json || a.json_path) {
    const json doc = reports_json(list.get());
    if (a.json_path) write_json(doc, *a.json_path);
    if (a.json) std::cout << doc.dump(2) << "\n";
  }
  if (!a.json) print_summary(list.get());
  if (a.csv_path) write_csv(list.get(), *a.csv_path);
  return dg_report_all_pass(list.get()) ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- main

int dispatch(int argc, char** argv) {
  CLI::App app{"Gamma, Barnes G, Hurwitz zeta and Clausen functions with identity checks",
               "dblgamma"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", dg_version());

  EvalArgs eval;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a function");
  cmd_eval->add_option("function", eval.function,
                       "loggamma | digamma | logbarnes | hurwitz | hurwitz-ds | hurwitz-dss | "
                       "clausen2")
      ->required();
  cmd_eval->add_option("args", eval.args, "Real arguments")->required();
  cmd_eval->add_option("--tol", eval.tol, "Absolute tolerance");
  cmd_eval->add_option("--max-terms", eval.max_terms, "Series term cap");
  cmd_eval->add_flag("--json", eval.json, "Print JSON");

  std::string const_name;
  bool const_json = false;
  auto* cmd_const = app.add_subcommand("const", "Print a named constant and how it is computed");
  cmd_const->add_option("name", const_name, "gamma | zeta-prime-0 | zeta-prime-m1 | log-g-half")
      ->required();
  cmd_const->add_flag("--json", const_json, "Print JSON");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check one identity, or all of them");
  cmd_verify->add_option("id", verify.id, "Identity id or 'all'")->required();
  cmd_verify->add_option("--grid", verify.grid, "a:b:step or a comma-separated list");
  cmd_verify->add_option("--tol", verify.tol, "Replace each identity's tolerance");
  cmd_verify->add_flag("--json", verify.json, "Print reports as JSON");
  cmd_verify->add_option("--csv", verify.csv_path, "Write per-point CSV to this path");

  int bernoulli_m = 0;
  auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Exact coefficients of B_m(x)");
  cmd_bernoulli->add_option("m", bernoulli_m, "Degree, 0..32")->required();

  VerifyArgs report;
  auto* cmd_report = app.add_subcommand("report", "Run every identity and export the results");
  cmd_report->add_option("--json", report.json_path, "Write JSON reports to this path");
  cmd_report->add_option("--csv", report.csv_path, "Write per-point CSV to this path");
  cmd_report->add_option("--tol", report.tol, "Replace each identity's tolerance");

  bool list_ids = false;
  auto* cmd_list = app.add_subcommand("list", "List identity ids");
  cmd_list->add_flag("--descriptions", list_ids, "Include descriptions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_eval->parsed()) return run_eval(eval);
  if (cmd_const->parsed()) return run_const(const_name, const_json);
  if (cmd_verify->parsed()) return run_verify(verify);
  if (cmd_bernoulli->parsed()) return run_bernoulli(bernoulli_m);
  if (cmd_report->parsed()) return run_verify(report);
  if (cmd_list->parsed()) {
    for (std::size_t i = 0; i < dg_identity_count(); ++i) {
      std::cout << dg_identity_id(i);
      if (list_ids) std::cout << "  " << dg_identity_description(i);
      std::cout << "\n";
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "dblgamma: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "dblgamma: " << e.what() << "\n";
    return kExitUsage;
  }
}
