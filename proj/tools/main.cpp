// mbhankel: command-line driver for the zero-order Hankel transform engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mbhankel/asymptotics.hpp"
#include "mbhankel/coefficient_catalog.hpp"
#include "mbhankel/errors.hpp"
#include "mbhankel/mellin_barnes.hpp"
#include "mbhankel/quadrature_oracle.hpp"
#include "mbhankel/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace mbhankel;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ExampleArgs {
  std::string example;
  std::optional<double> a, c;
  std::optional<int> n;
};

void add_example_options(CLI::App* cmd, ExampleArgs& ex) {
  cmd->add_option("--example", ex.example, "catalog label a1..a7")->required();
  cmd->add_option("--a", ex.a, "parameter a > 0");
  cmd->add_option("--c", ex.c, "parameter c > 0 (a2, a5, a6)");
  cmd->add_option("--n", ex.n, "integer n >= 0 (a3, a4)");
}

catalog::Example resolve(const ExampleArgs& args, catalog::ExampleParams& p) {
  catalog::Example ex;
  try {
    ex = catalog::parse_example(args.example);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!args.a) throw UsageError("--a is required for " + catalog::label(ex));
  p.a = *args.a;
  const bool needs_c = ex == catalog::Example::A2 || ex == catalog::Example::A5 || ex == catalog::Example::A6;
  const bool needs_n = ex == catalog::Example::A3 || ex == catalog::Example::A4;
  if (needs_c) {
    if (!args.c) throw UsageError("--c is required for " + catalog::label(ex));
    p.c = *args.c;
  }
  if (needs_n) {
    if (!args.n) throw UsageError("--n is required for " + catalog::label(ex));
    p.n = *args.n;
  }
  return ex;
}

json params_json(catalog::Example ex, const catalog::ExampleParams& p) {
  json j;
  j["a"] = p.a;
  if (ex == catalog::Example::A2 || ex == catalog::Example::A5 || ex == catalog::Example::A6) j["c"] = p.c;
  if (ex == catalog::Example::A3 || ex == catalog::Example::A4) j["n"] = p.n;
  return j;
}

struct MethodResult {
  std::string method;
  bool ok = false;
  double value = NAN;
  double error = NAN;
  std::string message;
  std::vector<std::string> diagnostics;
};

std::vector<std::string> applicable_methods(catalog::Example ex) {
  std::vector<std::string> m{"contour", "oracle"};
  if (ex == catalog::Example::A6) {
    m.push_back("series");
  } else {
    m.push_back("closed");
  }
  return m;
}

MethodResult run_method(const std::string& method, catalog::Example ex, const catalog::ExampleParams& p, double q,
                        double tol) {
  MethodResult r;
  r.method = method;
  if (method == "contour") {
    const auto tr = mb::transform(catalog::coefficient(ex, p), q, tol);
    r.value = tr.value;
    r.error = tr.error_estimate;
    r.diagnostics.push_back("nodes " + std::to_string(tr.nodes));
    r.diagnostics.push_back("imag_residue " + num(tr.imag_residue));
    r.diagnostics.push_back("tail_bound " + num(tr.tail_bound));
    for (std::size_t i = 0; i < tr.contours.size(); ++i) {
      const auto& c = tr.contours[i];
      r.diagnostics.push_back("contour " + std::to_string(i) + " alpha " + num(c.alpha) + " T " + num(c.half_height) +
                              " step " + num(c.step));
    }
    for (const auto& w : tr.warnings) r.diagnostics.push_back("warning: " + w);
  } else if (method == "oracle") {
    if (ex == catalog::Example::A5 && !(q > p.a)) throw DomainError("a5 requires q > a");
    const auto o = oracle::hankel0_direct(catalog::example_function(ex, p), q, tol,
                                          {catalog::oracle_cutoff(ex, p), 200});
    r.value = o.value;
    r.error = o.error_estimate;
    r.diagnostics.push_back("cells " + std::to_string(o.segments));
  } else if (method == "closed") {
    if (ex == catalog::Example::A6) throw UsageError("method 'closed' is not available for a6");
    r.value = catalog::closed_form(ex, q, p);
    r.error = 1e-13 * std::abs(r.value);
  } else if (method == "series") {
    if (ex != catalog::Example::A6) throw UsageError("method 'series' is only available for a6");
    const auto s = catalog::a6_series_psi(q, p.a, p.c);
    r.value = s.value;
    r.error = s.error_bound;
    r.diagnostics.push_back("terms " + std::to_string(s.truncation_index + 1));
  } else {
    throw UsageError("unknown method '" + method + "' (contour, oracle, closed, series)");
  }
  r.ok = true;
  return r;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(item.substr(b), &used);
      if (item.find_first_not_of(" \t", b + used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad --q-grid entry '" + item + "'");
    }
  }
  return out;
}

int cmd_transform(const ExampleArgs& args, double q, const std::string& method, double tol, bool as_json) {
  catalog::ExampleParams p;
  const auto ex = resolve(args, p);
  const auto r = run_method(method, ex, p, q, tol);
  if (as_json) {
    json j;
    j["example"] = catalog::label(ex);
    j["params"] = params_json(ex, p);
    j["q"] = q;
    j["method"] = method;
    j["value"] = r.value;
    j["error"] = r.error;
    j["diagnostics"] = r.diagnostics;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "example " << catalog::label(ex) << "  q " << num(q) << "  method " << method << "\n";
    std::cout << "value " << num(r.value) << "\n";
    std::cout << "error " << num(r.error) << "\n";
    for (const auto& d : r.diagnostics) std::cout << d << "\n";
  }
  return 0;
}

int cmd_compare(const ExampleArgs& args, const std::string& grid_text, double tol, bool as_csv) {
  catalog::ExampleParams p;
  const auto ex = resolve(args, p);
  const auto grid = parse_grid(grid_text);
  const auto methods = applicable_methods(ex);

  json rows = json::array();
  json timings = json::array();
  std::ostringstream csv;
  csv << "q,method,value,error,agree\n";
  for (double q : grid) {
    std::vector<MethodResult> results;
    for (const auto& m : methods) {
      const auto t0 = std::chrono::steady_clock::now();
      MethodResult r;
      try {
        r = run_method(m, ex, p, q, tol);
      } catch (const std::exception& e) {
        r.method = m;
        r.ok = false;
        r.message = e.what();
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      timings.push_back({{"q", q}, {"method", m}, {"ms", ms}});
      results.push_back(r);
    }
    // reference: closed form when present, otherwise the contour value
    const MethodResult* ref = nullptr;
    for (const auto& r : results) {
      if (r.ok && (r.method == "closed" || (ex == catalog::Example::A6 && r.method == "contour"))) ref = &r;
    }
    for (const auto& r : results) {
      bool agree = false;
      if (r.ok && ref != nullptr) {
        agree = std::abs(r.value - ref->value) <= r.error + ref->error + tol * std::abs(ref->value);
      }
      json row;
      row["q"] = q;
      row["method"] = r.method;
      row["value"] = r.ok ? json(r.value) : json(nullptr);
      row["error"] = r.ok ? json(r.error) : json(nullptr);
      row["agree"] = agree;
      if (!r.ok) row["message"] = r.message;
      rows.push_back(row);
      csv << num(q) << "," << r.method << "," << (r.ok ? num(r.value) : "nan") << ","
          << (r.ok ? num(r.error) : "nan") << "," << (agree ? "true" : "false") << "\n";
      if (!r.ok && as_csv) std::cerr << "q=" << num(q) << " " << r.method << ": " << r.message << "\n";
    }
  }
  if (as_csv) {
    std::cout << csv.str();
  } else {
    json j;
    j["metadata"] = {{"example", catalog::label(ex)},
                     {"params", params_json(ex, p)},
                     {"tolerance", tol},
                     {"version", kVersion}};
    j["rows"] = rows;
    j["timings"] = timings;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_asymptotic(const std::string& series, const std::string& path, double q, int terms, bool as_json) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open derivative table '" + path + "'");
  asym::DerivativeTable table;
  try {
    table = asym::read_derivative_table(in, path);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  SeriesResult r;
  if (series == "j0") {
    r = asym::willis_j0_series(table, q, terms);
  } else if (series == "j1") {
    r = asym::willis_j1_series(table, q, terms);
  } else if (series == "odd") {
    r = asym::hankel0_odd_series(table, q, terms);
  } else {
    throw UsageError("--series must be j0, j1 or odd");
  }
  if (as_json) {
    json j;
    j["series"] = series;
    j["q"] = q;
    j["value"] = r.value;
    j["error"] = r.first_omitted;
    j["truncation_index"] = r.truncation_index;
    j["partial_sums"] = r.partial_sums;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "series " << series << "  q " << num(q) << "\n";
    std::cout << "value " << num(r.value) << "\n";
    std::cout << "error " << num(r.first_omitted) << "\n";
    std::cout << "truncation_index " << r.truncation_index << "\n";
  }
  return 0;
}

int cmd_check_growth(const ExampleArgs& args, bool as_json) {
  catalog::ExampleParams p;
  const auto ex = resolve(args, p);
  const auto coef = catalog::coefficient(ex, p);
  const auto g = mb::estimate_growth(coef);
  if (as_json) {
    json j;
    j["example"] = catalog::label(ex);
    j["theorem"] = coef.kind == TheoremKind::theorem1 ? 1 : 2;
    j["a_est"] = g.a_est;
    j["p_est"] = g.p_est;
    j["c_est"] = g.c_est;
    j["signed_rate"] = g.signed_rate;
    j["fit_residual"] = g.fit_residual;
    j["admissible"] = g.admissible;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "example " << catalog::label(ex) << "  theorem " << (coef.kind == TheoremKind::theorem1 ? 1 : 2)
              << "\n";
    std::cout << "a_est " << num(g.a_est) << "  (fit residual " << num(g.fit_residual) << ")\n";
    std::cout << "p_est " << num(g.p_est) << "\n";
    std::cout << "c_est " << num(g.c_est) << "\n";
    std::cout << "signed_rate " << num(g.signed_rate) << "\n";
    std::cout << "admissible " << (g.admissible ? "yes" : "no (A at or above pi/2)") << "\n";
  }
  return 0;
}

int cmd_selftest(bool as_json, double scale) {
  selftest::Options opts;
  opts.tolerance_scale = scale;
  const auto rep = selftest::run_all(opts);
  if (as_json) {
    json j;
    j["all_passed"] = rep.all_passed;
    json cs = json::array();
    for (const auto& c : rep.criteria) {
      cs.push_back({{"id", c.id},
                    {"name", c.name},
                    {"passed", c.passed},
                    {"worst_ratio", std::isfinite(c.worst_ratio) ? json(c.worst_ratio) : json(nullptr)},
                    {"detail", c.detail}});
    }
    j["criteria"] = cs;
    j["timings"] = {{"total_seconds", rep.total_seconds}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.criteria) {
      std::printf("%2d  %s  %-56s worst/tol %-10.3g %s\n", c.id, c.passed ? "PASS" : "FAIL", c.name.c_str(),
                  c.worst_ratio, c.detail.c_str());
    }
    std::printf("total %.2f s\n", rep.total_seconds);
  }
  if (!rep.all_passed) {
    std::cerr << "failing criteria:";
    for (const auto& c : rep.criteria) {
      if (!c.passed) std::cerr << " " << c.id;
    }
    std::cerr << "\n";
    return kExitNumeric;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-order Hankel transforms through Mellin-Barnes contour integrals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ExampleArgs ex_args;
  double q = 0.0;
  std::string method = "contour";
  std::string grid;
  double tol = 1e-8;
  bool as_json = false;
  bool as_csv = false;
  int terms = 6;
  std::string series = "j0";
  std::string table_path;
  double corrupt_scale = 1.0;

  auto* transform = app.add_subcommand("transform", "evaluate one transform value");
  add_example_options(transform, ex_args);
  transform->add_option("--q", q, "transform variable q > 0")->required();
  transform->add_option("--method", method, "contour | oracle | closed | series")->default_val("contour");
  transform->add_option("--tol", tol, "relative tolerance")->default_val(1e-8);
  transform->add_flag("--json", as_json, "JSON output");

  auto add_compare = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    add_example_options(cmd, ex_args);
    cmd->add_option("--q-grid", grid, "comma-separated q values")->required();
    cmd->add_option("--tol", tol, "relative tolerance")->default_val(1e-8);
    cmd->add_flag("--json", as_json, "JSON output");
    cmd->add_flag("--csv", as_csv, "CSV output");
    return cmd;
  };
  auto* compare = add_compare("compare", "all applicable methods over a q grid (JSON by default)");
  auto* sweep = add_compare("sweep", "same as compare with CSV by default");

  auto* asymptotic = app.add_subcommand("asymptotic", "large-q series from a derivative table");
  asymptotic->add_option("table", table_path, "file with f^(k)(0), one per line")->required();
  asymptotic->add_option("--series", series, "j0 | j1 | odd")->default_val("j0");
  asymptotic->add_option("--q", q, "q > 0")->required();
  asymptotic->add_option("--terms", terms, "maximum number of terms")->default_val(6);
  asymptotic->add_flag("--json", as_json, "JSON output");

  auto* growth = app.add_subcommand("check-growth", "fit the growth of a coefficient along vertical lines");
  add_example_options(growth, ex_args);
  growth->add_flag("--json", as_json, "JSON output");

  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--json", as_json, "JSON output");
  self->add_option("--corrupt-tolerance", corrupt_scale, "scale every tolerance (negative control)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*transform) return cmd_transform(ex_args, q, method, tol, as_json);
    if (*compare) return cmd_compare(ex_args, grid, tol, as_csv && !as_json);
    if (*sweep) return cmd_compare(ex_args, grid, tol, !as_json);
    if (*asymptotic) return cmd_asymptotic(series, table_path, q, terms, as_json);
    if (*growth) return cmd_check_growth(ex_args, as_json);
    if (*self) return cmd_selftest(as_json, corrupt_scale);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
