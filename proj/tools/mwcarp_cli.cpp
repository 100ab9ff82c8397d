// mwcarp: command-line front end.
//
//   mwcarp solve    --instance FILE [--output FILE] [--heuristic H] [--runs N] [--seed S]
//   mwcarp validate --instance FILE --solution FILE
//   mwcarp info     --instance FILE
//   mwcarp gen-ob   --instance FILE --output FILE [--bridges 1|2] [--keep K] [--seed S]
//   mwcarp oracle   --instance FILE
//   mwcarp bench    --manifest FILE [--heuristic H] [--runs N] [--seed S]
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 infeasible instance,
// 3 solution rejected by validate.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mwcarp/bench.hpp"
#include "mwcarp/carp.hpp"
#include "mwcarp/error.hpp"
#include "mwcarp/io.hpp"

namespace {

using namespace mwcarp;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvalid = 3;

struct Flags {
  std::string instance;
  std::string output;
  std::string solution;
  std::string manifest;
  std::string heuristic = "all";
  std::string format = "canonical";
  int runs = 20;
  std::uint64_t seed = 0;
  int jobs = 0;
  int bridges = 1;
  int keep = 3;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kDemandExceedsCapacity:
    case ErrorCode::kUnreachable:
    case ErrorCode::kNotStronglyConnected:
    case ErrorCode::kGenerationFailed:
      return kExitInfeasible;
    default:
      return kExitIo;
  }
}

InstanceFormat parse_format(const std::string& f) {
  return f == "legacy" ? InstanceFormat::kLegacy : InstanceFormat::kCanonical;
}

Instance load(const std::string& path, const std::string& format) {
  Instance inst = read_instance_file(path, parse_format(format));
  for (const std::string& w : inst.warnings) std::cerr << "warning: " << w << '\n';
  return inst;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
}

SolveOptions solve_options(const Flags& f) {
  SolveOptions opts;
  if (f.heuristic != "all") opts.heuristic = parse_heuristic(f.heuristic);
  opts.runs = f.runs;
  opts.seed = f.seed;
  opts.jobs = f.jobs;
  return opts;
}

void print_report_header() { std::cout << "instance\theuristic\tbest\tLB\tratio\truns\tseconds\n"; }

void print_report_row(const Instance& inst, const Flags& f, Cost best, double seconds) {
  std::cout << inst.name << '\t' << f.heuristic << '\t' << best << '\t';
  if (const auto bound = lookup_bound(inst.name); bound && bound->lb > 0) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.4f", static_cast<double>(best) / static_cast<double>(bound->lb));
    std::cout << bound->lb << '\t' << ratio;
  } else {
    std::cout << "-\t-";
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", seconds);
  std::cout << '\t' << f.runs << '\t' << secs << '\n';
}

// Solves one instance, optionally writes the solution, returns the reported cost.
Cost solve_and_report(const Instance& inst, const Flags& f, const std::string& output) {
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult result = solve_mwcarp(inst, solve_options(f));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!output.empty()) write_file(output, write_solution(inst, result.best, {f.heuristic, f.seed, f.runs}));
  const Cost best = result.best.total_cost + inst.service_surcharge;
  print_report_row(inst, f, best, seconds);
  return best;
}

int cmd_solve(const Flags& f) {
  const Instance inst = load(f.instance, f.format);
  print_report_header();
  solve_and_report(inst, f, f.output);
  return kExitOk;
}

int cmd_validate(const Flags& f) {
  const Instance inst = load(f.instance, f.format);
  const Solution sol = parse_solution(read_text_file(f.solution));
  const ValidationReport report = validate(inst, sol);
  if (!report.ok) {
    std::cout << "invalid: " << report.violation << '\n';
    return kExitInvalid;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_info(const Flags& f) {
  const Instance inst = load(f.instance, f.format);
  const InstanceStats s = stats(inst);
  std::cout << "name " << inst.name << '\n'
            << "vertices " << s.vertices << '\n'
            << "edges " << s.edges << '\n'
            << "arcs " << s.arcs << '\n'
            << "demand_members " << s.demand_members << '\n'
            << "C " << s.components << '\n'
            << "total_demand " << s.total_demand << '\n'
            << "capacity " << s.capacity << '\n';
  return kExitOk;
}

int cmd_gen_ob(const Flags& f) {
  const Instance inst = load(f.instance, f.format);
  ObConfig cfg;
  cfg.bridges = f.bridges;
  cfg.keep = f.keep;
  cfg.seed = f.seed;
  const ObResult result = generate_ob_detailed(inst, cfg);
  write_file(f.output, write_instance(result.instance));
  std::cerr << "generated " << result.instance.name << " after " << result.attempts << " attempt(s)\n";
  return kExitOk;
}

int cmd_oracle(const Flags& f) {
  const Instance inst = load(f.instance, f.format);
  const Solution sol = oracle_solve(inst);
  std::cout << "cost " << sol.total_cost + inst.service_surcharge << '\n';
  return kExitOk;
}

int cmd_bench(const Flags& f) {
  const std::string text = read_text_file(f.manifest);
  const std::filesystem::path base = std::filesystem::path(f.manifest).parent_path();
  print_report_header();
  std::istringstream lines(text);
  std::string line;
  int status = kExitOk;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string path;
    std::string format = f.format;
    if (!(fields >> path)) continue;
    fields >> format;
    const std::filesystem::path p = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path) : base / path;
    try {
      solve_and_report(load(p.string(), format), f, "");
    } catch (const Error& e) {
      std::cerr << p.string() << ": " << e.what() << '\n';
      status = std::max(status, exit_code_for(e));
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed and windy capacitated arc routing solver"};
  app.require_subcommand(1);
  Flags f;

  const std::vector<std::string> heuristics = {"eo-r", "eo-p", "eo-s", "po-r", "po-p", "po-s", "all"};
  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", f.instance, "Instance file")->required();
    cmd->add_option("--format", f.format, "Instance format")->check(CLI::IsMember({"canonical", "legacy"}));
  };
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--heuristic", f.heuristic, "Service-direction heuristic")->check(CLI::IsMember(heuristics));
    cmd->add_option("--runs", f.runs, "Independent runs")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Base seed");
    cmd->add_option("--jobs", f.jobs, "Worker threads (0: one per CPU)")->check(CLI::NonNegativeNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  add_instance(solve);
  add_solver(solve);
  solve->add_option("--output", f.output, "Solution file");

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a solution file");
  add_instance(validate_cmd);
  validate_cmd->add_option("--solution", f.solution, "Solution file")->required();

  CLI::App* info = app.add_subcommand("info", "Print instance statistics");
  add_instance(info);

  CLI::App* gen_ob = app.add_subcommand("gen-ob", "Generate an Ob instance");
  add_instance(gen_ob);
  gen_ob->add_option("--output", f.output, "Output instance file")->required();
  gen_ob->add_option("--bridges", f.bridges, "Number of bridges")->check(CLI::Range(1, 2));
  gen_ob->add_option("--keep", f.keep, "Members kept per cluster pair")->check(CLI::PositiveNumber);
  gen_ob->add_option("--seed", f.seed, "Seed");

  CLI::App* oracle = app.add_subcommand("oracle", "Exact cost of a tiny instance");
  add_instance(oracle);

  CLI::App* bench = app.add_subcommand("bench", "Solve every instance of a manifest");
  bench->add_option("--manifest", f.manifest, "One instance path per line, optionally followed by a format")->required();
  bench->add_option("--format", f.format, "Default instance format")->check(CLI::IsMember({"canonical", "legacy"}));
  add_solver(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*solve) return cmd_solve(f);
    if (*validate_cmd) return cmd_validate(f);
    if (*info) return cmd_info(f);
    if (*gen_ob) return cmd_gen_ob(f);
    if (*oracle) return cmd_oracle(f);
    if (*bench) return cmd_bench(f);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitIo;
}
