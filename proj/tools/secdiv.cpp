// secdiv: exact counts and divisor classes for secant loci of linear series
// on curves, with a built-in symbolic cross-check engine.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "secdiv/chern.hpp"
#include "secdiv/counts.hpp"
#include "secdiv/errors.hpp"
#include "secdiv/fulton_pragacz.hpp"
#include "secdiv/moduli.hpp"
#include "secdiv/params.hpp"
#include "secdiv/render.hpp"
#include "secdiv/symprod.hpp"
#include "secdiv/verification.hpp"

namespace {

using secdiv::Json;
using secdiv::Rational;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConsistency = 3;

struct CommonOpts {
  std::string format = "table";
  std::string config_path;
};

secdiv::EnumerationLimits load_limits(const std::string& path) {
  secdiv::EnumerationLimits limits;
  if (path.empty()) return limits;
  std::ifstream in(path);
  if (!in)
    throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                  "cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                    "config line is not key=value: " + line);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "r_max")
        limits.r_max = std::stol(value);
      else if (key == "d_max")
        limits.d_max = std::stol(value);
      else
        throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                      "unknown config key: " + key);
    } catch (const std::invalid_argument&) {
      throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                    "config value is not an integer: " + line);
    }
  }
  return limits;
}

long resolve_degree(const std::string& d_flag, long g, long r, long t, long n) {
  if (d_flag == "auto") {
    const auto d = secdiv::solve_degree(g, r, t, n);
    if (!d)
      throw secdiv::ValidationError(
          secdiv::ValidationKind::codimension,
          "no integral degree satisfies the codimension condition for these flags");
    return *d;
  }
  try {
    std::size_t used = 0;
    const long d = std::stol(d_flag, &used);
    if (used != d_flag.size()) throw std::invalid_argument(d_flag);
    return d;
  } catch (const std::invalid_argument&) {
    throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                  "--d expects an integer or 'auto', got " + d_flag);
  }
}

void print_document(const Json& doc, const CommonOpts& opts,
                    const std::string& table_text, const std::string& latex_text = "") {
  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format == "latex") {
    if (latex_text.empty())
      throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                    "latex output is not available for this command");
    std::cout << latex_text << "\n";
  } else {
    std::cout << table_text;
  }
}

int run_count(long g, long r, const std::string& d_flag, long t, long n,
              const std::string& formula, const CommonOpts& opts) {
  const long d = resolve_degree(d_flag, g, r, t, n);
  const secdiv::SecantParams p = secdiv::validate(g, r, d, t, n);

  Json results = Json::object();
  std::ostringstream table;
  Rational value;
  if (formula == "general" || formula == "both") {
    const auto res = secdiv::castelnuovo_count(g, r, d, p.a);
    results["count_general"] = secdiv::rational_json(res.value);
    value = res.value;
  }
  if (formula == "product" || formula == "both") {
    const auto res = secdiv::secant_point_count(p);
    results["count_product"] = secdiv::rational_json(res.value);
    value = res.value;
  }
  if (formula == "both" &&
      results["count_general"] != results["count_product"])
    throw secdiv::ConsistencyError("general and product formulas disagree at " + p.str());
  results["count"] = secdiv::rational_json(value);

  Json doc;
  doc["command"] = "count";
  doc["inputs"] = secdiv::params_json(p);
  doc["inputs"]["formula"] = formula;
  doc["results"] = results;
  doc["provenance"] = Json::object();
  doc["provenance"]["formula_tag"] =
      formula == "general" ? "general_sum" : (formula == "product" ? "product_special"
                                                                   : "general_sum+product_special");

  table << "count " << p.str() << " with a = " << p.a.str() << ": ";
  if (formula == "both")
    table << results["count_general"].get<std::string>() << ", "
          << results["count_product"].get<std::string>()
          << "  (general and product formulas agree)";
  else
    table << secdiv::rational_str(value);
  table << "\n";
  print_document(doc, opts, table.str());
  return kExitOk;
}

int run_tcount(long g, long r, const std::string& d_flag, long t, long n, long delta,
               bool oracle, const CommonOpts& opts) {
  const long d = resolve_degree(d_flag, g, r, t, n);
  const secdiv::SecantParams p = secdiv::validate(g, r, d, t, n);
  const auto res = secdiv::pointed_secant_count(p, delta);

  Json results = Json::object();
  results["tcount"] = secdiv::rational_json(res.value);
  std::string oracle_note;
  if (oracle) {
    const Rational det = secdiv::fulton_pragacz_T(p, delta);
    results["oracle"] = secdiv::rational_json(det);
    if (det != res.value)
      throw secdiv::ConsistencyError("determinantal oracle gives " +
                                     secdiv::rational_str(det) + ", closed form gives " +
                                     secdiv::rational_str(res.value));
    results["oracle_agreement"] = true;
    oracle_note = "  (determinantal oracle agrees)";
  }

  Json doc;
  doc["command"] = "tcount";
  doc["inputs"] = secdiv::params_json(p);
  doc["inputs"]["delta"] = delta;
  doc["inputs"]["oracle"] = oracle;
  doc["results"] = results;
  doc["provenance"] = Json::object();
  doc["provenance"]["formula_tag"] = "interpolation";

  std::ostringstream table;
  table << "T(" << delta << ") at " << p.str() << ": " << secdiv::rational_str(res.value)
        << oracle_note << "\n";
  print_document(doc, opts, table.str());
  return kExitOk;
}

int run_class(const std::string& space, long g, long r, const std::string& d_flag, long t,
              long n, const CommonOpts& opts) {
  const long d = resolve_degree(d_flag, g, r, t, n);
  const secdiv::SecantParams p = secdiv::validate(g, r, d, t, n);

  Json doc;
  doc["command"] = "class";
  doc["inputs"] = secdiv::params_json(p);
  doc["inputs"]["space"] = space;
  std::ostringstream table;
  std::string latex;

  if (space == "mg1") {
    const auto cls = secdiv::pointed_bn_class(p);
    doc["results"] = secdiv::class_m_g1_json(cls);
    doc["provenance"] = Json::object();
    doc["provenance"]["construction"] = "nu * (sigma*BN + W)";
    table << secdiv::class_m_g1_text(cls) << "\n";
    latex = secdiv::class_m_g1_latex(cls);
  } else if (space == "mgn") {
    const auto cls = secdiv::secant_class_mgn(p);
    doc["results"] = secdiv::class_m_gn_json(cls);
    doc["provenance"] = Json::object();
    doc["provenance"]["construction"] = "test-curve coefficients over the symmetric basis";
    table << secdiv::class_m_gn_text(cls) << "\n";
    latex = secdiv::class_m_gn_latex(cls);
  } else if (space == "cn") {
    const auto cls = secdiv::secant_class_cn(p);
    doc["results"] = secdiv::class_cn_json(cls);
    doc["provenance"] = Json::object();
    doc["provenance"]["construction"] = "count/(g(n^2-1)) * (theta - (g/n) x)";
    table << secdiv::class_cn_text(cls) << "\n";
    latex = secdiv::class_cn_latex(cls);
  } else {
    throw secdiv::ValidationError(secdiv::ValidationKind::format,
                                  "--space must be mg1, mgn, or cn");
  }
  print_document(doc, opts, table.str(), latex);
  return kExitOk;
}

int run_slope_table(long g, long n_min, long n_max, const CommonOpts& opts) {
  const auto limits = load_limits(opts.config_path);
  const auto rows = secdiv::slope_table(g, n_min, n_max, limits);

  Json json_rows = Json::array();
  std::ostringstream table;
  std::ostringstream latex;
  table << "slope bounds for genus " << g << "\n";
  table << "  n | divisor | new bound g/n | classical floor(g/n) | witnesses\n";
  latex << "\\begin{tabular}{r c c c l}\n";
  latex << "$n$ & divisor & $g/n$ & $\\lfloor g/n \\rfloor$ & witnesses $(r,t,d)$\\\\\n";
  for (const auto& row : rows) {
    Json j;
    j["n"] = row.n;
    j["has_divisor"] = row.has_divisor;
    j["slope_new"] = secdiv::rational_json(row.slope_new);
    j["slope_classical"] = secdiv::rational_json(row.slope_classical);
    j["strict_improvement"] = row.strict_improvement;
    Json w = Json::array();
    for (const auto& p : row.witnesses) w.push_back(secdiv::params_json(p));
    j["witnesses"] = std::move(w);
    if (!row.note.empty()) j["note"] = row.note;
    json_rows.push_back(std::move(j));

    table << "  " << row.n << " | " << (row.has_divisor ? "yes" : "no ") << " | "
          << secdiv::rational_str(row.slope_new) << " | "
          << secdiv::rational_str(row.slope_classical) << " | ";
    latex << "$" << row.n << "$ & " << (row.has_divisor ? "yes" : "no") << " & $"
          << secdiv::rational_str(row.slope_new) << "$ & $"
          << secdiv::rational_str(row.slope_classical) << "$ & ";
    for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
      const auto& p = row.witnesses[i];
      if (i) {
        table << ", ";
        latex << ", ";
      }
      table << "(r=" << p.r << ",t=" << p.t << ",d=" << p.d << ")";
      latex << "$(" << p.r << "," << p.t << "," << p.d << ")$";
    }
    if (row.strict_improvement) table << "  [strict improvement]";
    if (!row.note.empty()) table << "  [" << row.note << "]";
    table << "\n";
    latex << "\\\\\n";
  }
  latex << "\\end{tabular}\n";

  Json doc;
  doc["command"] = "slope-table";
  doc["inputs"] = Json::object();
  doc["inputs"]["g"] = g;
  doc["inputs"]["n_min"] = n_min;
  doc["inputs"]["n_max"] = n_max;
  doc["results"] = Json::object();
  doc["results"]["rows"] = std::move(json_rows);
  doc["provenance"] = Json::object();
  doc["provenance"]["bound"] = "theta - (g/n) x vs theta - floor(g/n) x";
  print_document(doc, opts, table.str(), latex.str());
  return kExitOk;
}

int run_enumerate(long g, long n, const CommonOpts& opts) {
  const auto limits = load_limits(opts.config_path);
  const auto found = secdiv::enumerate_params(g, n, limits);

  Json json_rows = Json::array();
  std::ostringstream table;
  table << "valid parameters for g=" << g << ", n=" << n << " (" << found.size()
        << " found)\n";
  for (const auto& p : found) {
    Json j = secdiv::params_json(p);
    Json conds = Json::array();
    for (const auto c : secdiv::nonempty_conditions(p))
      conds.push_back(secdiv::nonempty_label(c));
    j["nonempty"] = std::move(conds);
    json_rows.push_back(std::move(j));
    table << "  r=" << p.r << " t=" << p.t << " d=" << p.d << "  s=" << p.s
          << "  a=" << p.a.str() << "  conditions:";
    for (const auto c : secdiv::nonempty_conditions(p))
      table << " " << secdiv::nonempty_label(c);
    table << "\n";
  }

  Json doc;
  doc["command"] = "enumerate";
  doc["inputs"] = Json::object();
  doc["inputs"]["g"] = g;
  doc["inputs"]["n"] = n;
  doc["results"] = Json::object();
  doc["results"]["params"] = std::move(json_rows);
  doc["provenance"] = Json::object();
  doc["provenance"]["scan"] = "degree pinned by the codimension condition";
  print_document(doc, opts, table.str());
  return kExitOk;
}

int run_residual(long g, long r, const std::string& d_flag, long t, long n,
                 const CommonOpts& opts) {
  const long d = resolve_degree(d_flag, g, r, t, n);
  const secdiv::SecantParams p = secdiv::validate(g, r, d, t, n);
  const secdiv::ResidualTuple q = secdiv::residual_params(p);

  Json results = Json::object();
  results["residual"] = Json::object();
  results["residual"]["g"] = q.g;
  results["residual"]["r"] = q.r;
  results["residual"]["d"] = q.d;
  results["residual"]["t"] = q.t;
  results["residual"]["n"] = q.n;

  std::ostringstream table;
  table << p.str() << " residuates to (g=" << q.g << ", r=" << q.r << ", d=" << q.d
        << ", t=" << q.t << ", n=" << q.n << ")\n";

  // Exploratory: the counts on both sides; equality is reported, not asserted.
  const Rational count = secdiv::secant_point_count(p).value;
  results["count"] = secdiv::rational_json(count);
  try {
    const secdiv::SecantParams pq = secdiv::validate(q.g, q.r, q.d, q.t, q.n);
    const Rational rcount = secdiv::secant_point_count(pq).value;
    results["residual_count"] = secdiv::rational_json(rcount);
    results["counts_agree"] = (rcount == count);
    table << "counts: " << secdiv::rational_str(count) << " vs "
          << secdiv::rational_str(rcount)
          << (rcount == count ? "  (agree)" : "  (differ)") << "\n";
  } catch (const secdiv::ValidationError& e) {
    results["residual_count"] = nullptr;
    table << "count: " << secdiv::rational_str(count)
          << "; residual tuple does not validate (" << e.what() << ")\n";
  }

  Json doc;
  doc["command"] = "residual";
  doc["inputs"] = secdiv::params_json(p);
  doc["results"] = results;
  doc["provenance"] = Json::object();
  doc["provenance"]["map"] = "(g, r, d, r, n) -> (g, g-d+n-1, 2g-2-d+n, n-r, n)";
  print_document(doc, opts, table.str());
  return kExitOk;
}

int run_verify(const std::string& level_flag, unsigned seed, const CommonOpts& opts) {
  const secdiv::VerifyLevel level = level_flag == "full" ? secdiv::VerifyLevel::full
                                                         : secdiv::VerifyLevel::quick;
  const auto results = secdiv::run_verification(level, seed);

  Json json_rows = Json::array();
  std::ostringstream table;
  bool all_passed = true;
  for (const auto& suite : results) {
    Json j;
    j["suite"] = suite.name;
    j["passed"] = suite.passed;
    j["cases"] = suite.cases;
    if (!suite.passed) j["counterexample"] = suite.counterexample;
    json_rows.push_back(std::move(j));
    table << (suite.passed ? "PASS" : "FAIL") << "  " << suite.name << " ("
          << suite.cases << " cases)";
    if (!suite.passed) table << "\n      first counterexample: " << suite.counterexample;
    table << "\n";
    all_passed = all_passed && suite.passed;
  }

  Json doc;
  doc["command"] = "verify";
  doc["inputs"] = Json::object();
  doc["inputs"]["level"] = level_flag;
  doc["inputs"]["seed"] = seed;
  doc["results"] = Json::object();
  doc["results"]["suites"] = std::move(json_rows);
  doc["results"]["all_passed"] = all_passed;
  doc["provenance"] = Json::object();
  doc["provenance"]["note"] = "seed affects only randomized property suites";
  print_document(doc, opts, table.str());
  if (!all_passed) {
    std::cerr << "verification failed\n";
    return kExitConsistency;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact secant-divisor counts, divisor classes, and slope bounds"};
  app.require_subcommand(1);

  CommonOpts opts;
  long g = 0, r = 0, t = 0, n = 0, delta = 0, n_min = 0, n_max = 0;
  std::string d_flag = "auto";
  std::string formula = "product";
  std::string space = "cn";
  std::string level = "quick";
  unsigned seed = 20240915;
  bool oracle = false;

  const auto add_format = [&opts](CLI::App* cmd, bool with_latex) {
    cmd->add_option("--format", opts.format,
                    with_latex ? "output format: table, json, or latex"
                               : "output format: table or json")
        ->check(with_latex ? CLI::IsMember({"table", "json", "latex"})
                           : CLI::IsMember({"table", "json"}));
  };
  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--g", g, "genus")->required();
    cmd->add_option("--r", r, "series dimension")->required();
    cmd->add_option("--d", d_flag, "degree, or 'auto' to infer from the codimension condition");
    cmd->add_option("--t", t, "secant defect")->required();
    cmd->add_option("--n", n, "number of points")->required();
  };

  auto* cmd_count = app.add_subcommand("count", "Castelnuovo-type point count");
  add_params(cmd_count);
  cmd_count->add_option("--formula", formula, "general, product, or both")
      ->check(CLI::IsMember({"general", "product", "both"}));
  add_format(cmd_count, false);

  auto* cmd_tcount = app.add_subcommand("tcount", "split-vanishing count T(delta)");
  add_params(cmd_tcount);
  cmd_tcount->add_option("--delta", delta, "vanishing at the moving point")->required();
  cmd_tcount->add_flag("--oracle", oracle, "cross-check against the determinantal oracle");
  add_format(cmd_tcount, false);

  auto* cmd_class = app.add_subcommand("class", "divisor class on a chosen space");
  cmd_class->add_option("--space", space, "mg1, mgn, or cn")
      ->required()
      ->check(CLI::IsMember({"mg1", "mgn", "cn"}));
  add_params(cmd_class);
  add_format(cmd_class, true);

  auto* cmd_slope = app.add_subcommand("slope-table", "effective-cone slope bounds");
  cmd_slope->add_option("--g", g, "genus")->required();
  cmd_slope->add_option("--n-min", n_min, "first n")->required();
  cmd_slope->add_option("--n-max", n_max, "last n")->required();
  cmd_slope->add_option("--config", opts.config_path, "key=value file with r_max / d_max");
  add_format(cmd_slope, true);

  auto* cmd_enum = app.add_subcommand("enumerate", "valid parameters for (g, n)");
  cmd_enum->add_option("--g", g, "genus")->required();
  cmd_enum->add_option("--n", n, "number of points")->required();
  cmd_enum->add_option("--config", opts.config_path, "key=value file with r_max / d_max");
  add_format(cmd_enum, false);

  auto* cmd_residual = app.add_subcommand("residual", "Serre residuation of a t = r tuple");
  add_params(cmd_residual);
  add_format(cmd_residual, false);

  auto* cmd_verify = app.add_subcommand("verify", "run every identity suite");
  cmd_verify->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  cmd_verify->add_option("--seed", seed, "seed for randomized property suites");
  add_format(cmd_verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (cmd_count->parsed()) return run_count(g, r, d_flag, t, n, formula, opts);
    if (cmd_tcount->parsed()) return run_tcount(g, r, d_flag, t, n, delta, oracle, opts);
    if (cmd_class->parsed()) return run_class(space, g, r, d_flag, t, n, opts);
    if (cmd_slope->parsed()) return run_slope_table(g, n_min, n_max, opts);
    if (cmd_enum->parsed()) return run_enumerate(g, n, opts);
    if (cmd_residual->parsed()) return run_residual(g, r, d_flag, t, n, opts);
    if (cmd_verify->parsed()) return run_verify(level, seed, opts);
  } catch (const secdiv::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const secdiv::ValidationError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
