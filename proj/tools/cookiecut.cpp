#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cookiecut/adversary.hpp"
#include "cookiecut/bounds.hpp"
#include "cookiecut/compose.hpp"
#include "cookiecut/core.hpp"
#include "cookiecut/io.hpp"
#include "cookiecut/oracle.hpp"

namespace {

using namespace cookiecut;

constexpr int kExitOk = 0;
constexpr int kExitUnfair = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

Rat tolerance_for(const ParsedInstance& parsed, const std::string& tol_flag) {
  if (!tol_flag.empty()) {
    const auto q = parse_rational(tol_flag);
    if (!q || *q < 0) throw SolverError(ErrorCode::MalformedInput, "bad --tol value");
    return *q;
  }
  return parsed.had_decimals ? rat(1, 1000000000) : Rat(0);
}

void print_report(std::ostream& os, const VerificationReport& report, int r, long guarantee,
                  const char* method) {
  os << "method: " << method << "\n";
  os << "children: " << r << "\n";
  os << "fair: " << (report.fair ? "yes" : "no") << "\n";
  os << "max_residual: " << fraction_string(report.max_residual);
  if (report.worst_agent > 0 && !report.fair) {
    os << " (agent " << report.worst_agent << ", kind " << report.worst_kind + 1 << ")";
  }
  os << "\n";
  os << "strokes: " << report.strokes << "\n";
  os << "cookies_cut: " << report.cookies_cut << "\n";
  if (report.bad_cuts.has_value()) os << "bad_cuts: " << *report.bad_cuts << "\n";
  os << "full_per_agent:";
  for (long f : report.full_per_agent) os << ' ' << f;
  os << "\n";
  os << "guarantee: " << guarantee << "\n";
}

void print_agent_totals(std::ostream& os, const Instance& inst, const Allocation& alloc) {
  std::vector<FrostingVector> y(alloc.r, FrostingVector(inst.m, Rat(0)));
  for (int i = 0; i < inst.n(); ++i) {
    for (const auto& [agent, frac] : alloc.shares[i]) {
      for (int j = 0; j < inst.m; ++j) y[agent - 1][j] += inst.cookies[i][j] * frac;
    }
  }
  os << "agent_totals:\n";
  for (int u = 0; u < alloc.r; ++u) {
    os << "  " << u + 1 << ":";
    for (int j = 0; j < inst.m; ++j) os << ' ' << fraction_string(y[u][j]);
    os << "\n";
  }
}

int cmd_solve(const std::string& input, const std::string& output, int children,
              const std::string& method_flag, const std::string& tol_flag, bool force) {
  const ParsedInstance parsed = read_instance(input);
  const Method method = method_from_name(method_flag);
  const SolveOutput out = solve_with(parsed.instance, children, method, nullptr, force);
  if (!output.empty()) write_allocation(output, out.alloc);

  const Rat tol = tolerance_for(parsed, tol_flag);
  const LabeledPartition* part = out.partition ? &*out.partition : nullptr;
  const VerificationReport report = verify(parsed.instance, out.alloc, children, tol, part);
  print_report(std::cout, report, children, out.guarantee,
               children == 1 ? "trivial" : method_name(out.resolved));
  print_agent_totals(std::cout, parsed.instance, out.alloc);
  if (!report.fair) return kExitUnfair;
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& plan, int children,
               const std::string& tol_flag) {
  const ParsedInstance parsed = read_instance(input);
  const Allocation alloc = read_allocation(plan);
  const int r = children > 0 ? children : alloc.r;
  const Rat tol = tolerance_for(parsed, tol_flag);
  const VerificationReport report = verify(parsed.instance, alloc, r, tol);
  const long budget = static_cast<long>(r - 1) * parsed.instance.m;
  print_report(std::cout, report, r, budget, "verify");
  print_agent_totals(std::cout, parsed.instance, alloc);
  const bool ok = report.fair && report.strokes <= budget;
  if (!ok) {
    std::cout << "verdict: FAIL"
              << (report.fair ? " (stroke budget exceeded)" : " (unfair)") << "\n";
    return kExitUnfair;
  }
  std::cout << "verdict: OK\n";
  return kExitOk;
}

int cmd_bounds(long n, long m, long r) {
  const BoundsTable t = bounds_table(n, m, r);
  std::ostringstream table;
  table << "n=" << t.n << " m=" << t.m << " r=" << t.r << "\n";
  auto row = [&](const char* name, long value) {
    table << "  " << name;
    for (size_t pad = std::string(name).size(); pad < 14; ++pad) table << ' ';
    table << value << "\n";
  };
  row("cut_budget", t.cut_budget);
  row("main", t.main);
  row("conjecture", t.conjecture);
  if (t.two) row("two", *t.two);
  if (t.pow2_exact) row("pow2_exact", *t.pow2_exact);
  if (t.pow2_general) row("pow2_general", *t.pow2_general);
  row("naive", t.naive);
  row("no_vz", t.no_vz);
  std::cout << table.str();

  std::ostringstream machine;
  machine << "{\"n\":" << t.n << ",\"m\":" << t.m << ",\"r\":" << t.r
          << ",\"cut_budget\":" << t.cut_budget << ",\"main\":" << t.main
          << ",\"conjecture\":" << t.conjecture;
  if (t.two) machine << ",\"two\":" << *t.two;
  if (t.pow2_exact) machine << ",\"pow2_exact\":" << *t.pow2_exact;
  if (t.pow2_general) machine << ",\"pow2_general\":" << *t.pow2_general;
  machine << ",\"naive\":" << t.naive << ",\"no_vz\":" << t.no_vz << "}";
  std::cout << machine.str() << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& input, int children, long budget, const std::string& output,
               double work_limit) {
  const ParsedInstance parsed = read_instance(input);
  OracleLimits limits;
  if (work_limit > 0) limits.work_limit = work_limit;
  const OracleResult res = oracle_optimal(parsed.instance, children, budget, limits);
  std::cout << "feasible: " << (res.feasible ? "yes" : "no") << "\n";
  std::cout << "best_min_full: " << res.best_min_full << "\n";
  std::cout << "lp_count: " << res.lp_count << "\n";
  if (res.feasible) {
    const VerificationReport report = verify(parsed.instance, res.witness, children);
    std::cout << "witness_strokes: " << report.strokes << "\n";
    if (!output.empty()) write_allocation(output, res.witness);
  }
  return kExitOk;
}

int cmd_probe(int nmax, int mmax, std::vector<int> r_set, int trials, unsigned long long seed,
              double work_limit) {
  if (r_set.empty()) r_set = {2, 3};
  OracleLimits limits;
  if (work_limit > 0) limits.work_limit = work_limit;
  const ProbeReport report = probe_conjecture(nmax, mmax, r_set, trials, seed, limits);
  std::cout << "trials: " << report.trials << "\n";
  std::cout << "ran: " << report.ran << "\n";
  std::cout << "skipped_work: " << report.skipped_work << "\n";
  std::cout << "violations: " << report.violations << "\n";
  std::cout << "infeasible: " << report.infeasible << "\n";
  std::cout << "tight: " << report.tight << "\n";
  std::cout << "min_slack: " << report.min_slack << "\n";
  for (const auto& line : report.counterexamples) std::cout << "counterexample: " << line << "\n";
  return report.violations == 0 ? kExitOk : kExitUnfair;
}

int cmd_adversary(int m, int r, int n, const std::string& output) {
  const Instance inst = tight_instance(m, r, n);
  const std::string text = instance_to_json(inst);
  if (output.empty()) std::cout << text;
  else write_instance(output, inst);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cookiecut: split bundles of frosted cookies fairly with few cuts"};
  app.require_subcommand(1);

  std::string input, output, plan, method = "auto", tol;
  int children = 2;
  bool force = false;
  long n = 0, m = 0, r = 0, budget = 0;
  int nmax = 5, mmax = 2, trials = 50;
  unsigned long long seed = 1;
  double work_limit = 0;
  std::vector<int> r_set;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance and write the cut plan");
  solve_cmd->add_option("--input", input, "instance JSON file")->required();
  solve_cmd->add_option("--output", output, "allocation JSON file to write");
  solve_cmd->add_option("--children", children, "number of agents")->required();
  solve_cmd->add_option("--method", method, "auto|two|two-m2|prime|pow2|product");
  solve_cmd->add_option("--tol", tol, "verification tolerance (rational)");
  solve_cmd->add_flag("--force", force, "run prime solves beyond the size envelope");

  auto* verify_cmd = app.add_subcommand("verify", "check a cut plan against an instance");
  verify_cmd->add_option("--input", input, "instance JSON file")->required();
  verify_cmd->add_option("--plan", plan, "allocation JSON file")->required();
  verify_cmd->add_option("--children", children, "expected agent count (default: plan's r)");
  verify_cmd->add_option("--tol", tol, "tolerance (rational)");
  verify_cmd->parse_complete_callback([&] {
    if (verify_cmd->count("--children") == 0) children = 0;
  });

  auto* bounds_cmd = app.add_subcommand("bounds", "print the guarantee table");
  bounds_cmd->add_option("--n", n, "cookie count")->required();
  bounds_cmd->add_option("--m", m, "frosting kinds")->required();
  bounds_cmd->add_option("--r", r, "agent count")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive optimum for small instances");
  oracle_cmd->add_option("--input", input, "instance JSON file")->required();
  oracle_cmd->add_option("--children", children, "number of agents")->required();
  oracle_cmd->add_option("--budget", budget, "stroke budget")->required();
  oracle_cmd->add_option("--output", output, "file for the witness plan");
  oracle_cmd->add_option("--work-limit", work_limit, "override the r^n*2^n guard");

  auto* probe_cmd = app.add_subcommand("probe", "probe the conjectured guarantee on random instances");
  probe_cmd->add_option("--nmax", nmax, "max cookie count");
  probe_cmd->add_option("--mmax", mmax, "max frosting kinds");
  probe_cmd->add_option("--r", r_set, "agent counts (repeatable)");
  probe_cmd->add_option("--trials", trials, "random trials");
  probe_cmd->add_option("--seed", seed, "random seed");
  probe_cmd->add_option("--work-limit", work_limit, "override the r^n*2^n guard");

  auto* adversary_cmd = app.add_subcommand("adversary", "emit a tight cut-count instance");
  adversary_cmd->add_option("--m", m, "frosting kinds")->required();
  adversary_cmd->add_option("--r", r, "agent count")->required();
  adversary_cmd->add_option("--n", n, "cookie count")->required();
  adversary_cmd->add_option("--output", output, "instance JSON file to write");

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return cmd_solve(input, output, children, method, tol, force);
    if (verify_cmd->parsed()) return cmd_verify(input, plan, children, tol);
    if (bounds_cmd->parsed()) return cmd_bounds(n, m, r);
    if (oracle_cmd->parsed()) {
      return cmd_oracle(input, children, budget, output, work_limit);
    }
    if (probe_cmd->parsed()) return cmd_probe(nmax, mmax, r_set, trials, seed, work_limit);
    if (adversary_cmd->parsed()) {
      return cmd_adversary(static_cast<int>(m), static_cast<int>(r), static_cast<int>(n), output);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  } catch (const SolverError& e) {
    std::cerr << error_code_name(e.code) << ": " << e.what() << "\n";
    if (e.code == ErrorCode::BudgetExceeded || e.code == ErrorCode::WorkLimit) return kExitBudget;
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}
