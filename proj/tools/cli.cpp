#include "delsarte/delsarte.hpp"
#include "delsarte/krawtchouk.hpp"
#include "delsarte/serialization.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <string>

namespace {

using nlohmann::json;
using namespace delsarte;

// Stable exit-code contract:
//   0 success, 1 verification failure, 2 bad parameters,
//   3 domain precondition violation, 4 I/O failure.
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIo = 4;

constexpr int kFormatVersion = 1;

struct CliError {
  int code;
  std::string message;
};

json envelope(const std::string& command, json params, json result) {
  return json{{"command", command},
              {"params", std::move(params)},
              {"result", std::move(result)},
              {"format_version", kFormatVersion}};
}

void check_params(long n, long d, long n_cap) {
  if (d < 1 || d > n || n > n_cap)
    throw CliError{kExitBadParams,
                   "requires 1 <= d <= n <= " + std::to_string(n_cap) +
                       " (raise --max-n to go higher)"};
}

Rational sum(const std::vector<Rational>& v) {
  return std::accumulate(v.begin(), v.end(), Rational(0));
}

std::string join(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

int cmd_bound(long n, long d, bool as_json) {
  Rational bound = lp_bound(ProblemParams(n, d));
  if (as_json)
    std::cout << envelope("bound", {{"n", n}, {"d", d}},
                          {{"bound", bound.str()}})
              << "\n";
  else
    std::cout << bound.str() << "\n";
  return 0;
}

int cmd_solve(long n, long d, const std::string& target, bool as_json) {
  ProblemParams p(n, d);
  LinearProgram lp;
  if (target == "primal")
    lp = build_primal(p);
  else if (target == "dual")
    lp = build_dual(p);
  else if (target == "decomposition")
    lp = build_decomposition_lp(p);
  else if (target == "symmetric")
    lp = build_symmetric_lp(p);
  else
    throw CliError{kExitBadParams, "unknown target '" + target + "'"};

  Solution s = solve(lp);
  if (s.status != SolveStatus::optimal)
    throw CliError{kExitPrecondition, "LP did not solve to optimality"};

  json result{{"value", s.value.str()}};
  std::string label;
  std::vector<Rational> full;
  if (target == "primal") {
    full = quasicode_from_primal_point(p, s.point).A;
    label = "A";
  } else if (target == "dual") {
    full = dual_from_point(p, s.point).c;
    label = "c";
  } else {
    full.assign(s.point.begin(), s.point.begin() + n + 1);
    label = "b";
  }
  result[label] = rationals_to_json(full);
  if (as_json)
    std::cout << envelope("solve", {{"n", n}, {"d", d}, {"target", target}},
                          result)
              << "\n";
  else
    std::cout << "value = " << s.value.str() << "\n"
              << label << " = " << join(full) << "\n";
  return 0;
}

int cmd_transform(const std::string& path, const std::string& op, bool as_json) {
  std::ifstream in(path);
  if (!in)
    throw CliError{kExitIo, "cannot open '" + path + "'"};
  json input;
  try {
    in >> input;
  } catch (const json::exception& e) {
    throw CliError{kExitBadParams, "input is not valid JSON: " + std::string(e.what())};
  }

  json result;
  try {
    if (op == "decompose") {
      result = to_json(decompose(quasicode_from_json(input)));
    } else if (op == "recompose") {
      Decomposition dec = decomposition_from_json(input);
      result = json{{"n", dec.n}, {"values", rationals_to_json(recompose(dec))}};
    } else if (op == "extend") {
      result = to_json(extend(quasicode_from_json(input)));
    } else if (op == "puncture") {
      result = to_json(puncture(quasicode_from_json(input)));
    } else {
      throw CliError{kExitBadParams, "unknown op '" + op + "'"};
    }
  } catch (const std::domain_error& e) {
    throw CliError{kExitPrecondition, e.what()};
  } catch (const std::invalid_argument& e) {
    throw CliError{kExitBadParams, e.what()};
  } catch (const json::exception& e) {
    throw CliError{kExitBadParams, e.what()};
  }

  if (as_json)
    std::cout << envelope("transform", {{"op", op}, {"input", path}}, result)
              << "\n";
  else
    std::cout << result << "\n";
  return 0;
}

int cmd_unique(long n, long d, const std::string& target, bool as_json) {
  ProblemParams p(n, d);
  UniquenessReport rep;
  if (target == "primal")
    rep = primal_uniqueness(p);
  else if (target == "dual")
    rep = dual_uniqueness(p);
  else
    throw CliError{kExitBadParams, "unknown target '" + target + "'"};

  if (as_json) {
    json result{{"target", target},
                {"verdict", rep.unique ? "unique" : "non-unique"},
                {"optimum_value", rep.optimum_value.str()}};
    json ranges = json::array();
    for (const auto& [lo, hi] : rep.variable_ranges)
      ranges.push_back(json::array({lo.str(), hi.str()}));
    result["variable_ranges"] = std::move(ranges);
    if (!rep.unique) {
      result["witness_a"] = rationals_to_json(*rep.witness_a);
      result["witness_b"] = rationals_to_json(*rep.witness_b);
    }
    std::cout << envelope("unique", {{"n", n}, {"d", d}, {"target", target}},
                          result)
              << "\n";
  } else {
    std::cout << (rep.unique ? "unique" : "non-unique")
              << " (optimum " << rep.optimum_value.str() << ")\n";
    if (!rep.unique) {
      std::cout << "witness_a = " << join(*rep.witness_a) << "\n"
                << "witness_b = " << join(*rep.witness_b) << "\n";
    }
  }
  return 0;
}

int cmd_scan(long n_max, const std::string& out_base, unsigned jobs) {
  std::vector<ScanRow> rows = scan_uniqueness(n_max, jobs);

  std::ofstream csv(out_base + ".csv");
  if (!csv)
    throw CliError{kExitIo, "cannot write '" + out_base + ".csv'"};
  write_scan_csv(rows, csv);
  std::ofstream js(out_base + ".json");
  if (!js)
    throw CliError{kExitIo, "cannot write '" + out_base + ".json'"};
  js << scan_to_json(rows).dump(2) << "\n";
  if (!csv.good() || !js.good())
    throw CliError{kExitIo, "write failure under '" + out_base + "'"};

  std::string summary;
  for (const auto& r : rows) {
    if (r.unique)
      continue;
    if (!summary.empty())
      summary += ",";
    summary += "(" + std::to_string(r.n) + "," + std::to_string(r.d) + ")";
  }
  std::cout << "non-unique: " << (summary.empty() ? "none" : "{" + summary + "}")
            << "\n"
            << "wrote " << out_base << ".csv and " << out_base << ".json\n";
  return 0;
}

int cmd_verify(long n_max) {
  bool all_pass = true;
  for (const auto& c : verify_theorems(n_max)) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.pass)
      std::cout << "  [" << c.counterexample << "]";
    std::cout << "\n";
    all_pass = all_pass && c.pass;
  }
  return all_pass ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Delsarte linear programming bounds for binary codes"};
  app.require_subcommand(1);

  long n_cap = 40;
  app.add_option("--max-n", n_cap, "Cap on n for bound/solve/unique")
      ->capture_default_str();

  long n = 0, d = 0, n_max = 23;
  bool as_json = false;
  std::string target = "primal", op, input_path, out_base = "census";
  unsigned jobs = 0;

  auto* bound = app.add_subcommand("bound", "Exact LP bound for (n,d)");
  bound->add_option("n", n)->required();
  bound->add_option("d", d)->required();
  bound->add_flag("--json", as_json);

  auto* solve_cmd = app.add_subcommand("solve", "Solve an LP formulation");
  solve_cmd->add_option("n", n)->required();
  solve_cmd->add_option("d", d)->required();
  solve_cmd->add_option("--target", target)
      ->check(CLI::IsMember({"primal", "dual", "decomposition", "symmetric"}));
  solve_cmd->add_flag("--json", as_json);

  auto* transform = app.add_subcommand("transform", "Apply a quasicode transform");
  transform->add_option("input", input_path, "JSON input file")->required();
  transform->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"decompose", "recompose", "extend", "puncture"}));
  transform->add_flag("--json", as_json);

  auto* unique = app.add_subcommand("unique", "Uniqueness of the LP optimum");
  unique->add_option("n", n)->required();
  unique->add_option("d", d)->required();
  unique->add_option("--target", target)
      ->check(CLI::IsMember({"primal", "dual"}));
  unique->add_flag("--json", as_json);

  auto* scan = app.add_subcommand("scan", "Uniqueness census over all (n,d)");
  scan->add_option("--n-max", n_max)->capture_default_str();
  scan->add_option("--out", out_base, "Output base path (.csv/.json appended)")
      ->capture_default_str();
  scan->add_option("--jobs", jobs, "Worker threads (0 = hardware)");

  long verify_n_max = 8;
  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  verify->add_option("--n-max", verify_n_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadParams;
  }

  try {
    if (bound->parsed()) {
      check_params(n, d, n_cap);
      return cmd_bound(n, d, as_json);
    }
    if (solve_cmd->parsed()) {
      check_params(n, d, n_cap);
      return cmd_solve(n, d, target, as_json);
    }
    if (transform->parsed())
      return cmd_transform(input_path, op, as_json);
    if (unique->parsed()) {
      check_params(n, d, n_cap);
      return cmd_unique(n, d, target, as_json);
    }
    if (scan->parsed()) {
      if (n_max < 1)
        throw CliError{kExitBadParams, "scan requires --n-max >= 1"};
      return cmd_scan(n_max, out_base, jobs);
    }
    if (verify->parsed()) {
      if (verify_n_max < 1)
        throw CliError{kExitBadParams, "verify requires --n-max >= 1"};
      return cmd_verify(verify_n_max);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitBadParams;
}
