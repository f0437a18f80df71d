// pmat: exact solvers for parametric matroid problems.
//
// Subcommands: solve, wsd, interdict, check, verify, export-plot.
// Exit codes: 0 success, 1 malformed input, 2 infeasible or degenerate
// without perturbation, 3 dirty assumption check, 4 audit failure.

#include "pmat/instance_io.hpp"
#include "pmat/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitDirtyCheck = 3;
constexpr int kExitAuditFailure = 4;

struct CommonArgs {
  std::string instance_path;
  std::string out_path;
  std::string perturb;
  unsigned long long seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pmat::InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pmat::InputError("cannot write '" + out_path + "'");
  out << text;
}

pmat::io::InstanceDocument load_instance(const CommonArgs& args) {
  return pmat::io::parse_instance(read_file(args.instance_path));
}

std::optional<pmat::Rational> parse_perturb(const std::string& text) {
  if (text.empty()) return std::nullopt;
  pmat::Rational epsilon = pmat::parse_rational(text);
  if (epsilon <= 0) throw pmat::InputError("--perturb must be positive");
  return epsilon;
}

void require_weights(const pmat::io::InstanceDocument& instance) {
  if (!instance.has_weights())
    throw pmat::InputError("instance has no 'weights' block");
}

void require_costs(const pmat::io::InstanceDocument& instance) {
  if (!instance.has_costs())
    throw pmat::InputError("instance has no 'costs' block");
}

std::string describe_pair(const pmat::io::InstanceDocument& instance, int e, int f) {
  return "(" + instance.label(e) + "," + instance.label(f) + ")";
}

int run_check(const CommonArgs& args) {
  pmat::io::InstanceDocument instance = load_instance(args);
  require_weights(instance);
  pmat::WeightVector weights = instance.weights;
  if (auto epsilon = parse_perturb(args.perturb))
    weights = pmat::perturb_weights(weights, args.seed, *epsilon);

  pmat::SeparatingSystem system =
      pmat::build_separating_hyperplanes(weights, instance.matroid.active_elements());
  pmat::AssumptionReport report = pmat::check_assumptions(system.hyperplanes);

  for (const auto& [e, f] : system.identical_pairs)
    std::cout << "identical weight functions: " << describe_pair(instance, e, f)
              << "\n";
  for (const auto& [i, j] : report.duplicate_pairs)
    std::cout << "duplicate hyperplanes: h"
              << describe_pair(instance, system.hyperplanes[i].elem_a,
                               system.hyperplanes[i].elem_b)
              << " == h"
              << describe_pair(instance, system.hyperplanes[j].elem_a,
                               system.hyperplanes[j].elem_b)
              << "\n";
  for (int i : report.vertical)
    std::cout << "vertical hyperplane (warning): h"
              << describe_pair(instance, system.hyperplanes[i].elem_a,
                               system.hyperplanes[i].elem_b)
              << "\n";

  const bool dirty =
      !system.identical_pairs.empty() || !report.duplicates_clean();
  std::cout << (dirty ? "dirty" : "clean") << ": " << system.hyperplanes.size()
            << " hyperplanes, " << system.identical_pairs.size()
            << " identical weight pairs, " << report.duplicate_pairs.size()
            << " duplicate pairs, " << report.vertical.size() << " vertical\n";
  return dirty ? kExitDirtyCheck : kExitOk;
}

int run_solve(const CommonArgs& args, const std::string& algorithm, bool no_merge) {
  pmat::io::InstanceDocument instance = load_instance(args);
  require_weights(instance);
  pmat::SolveOptions options;
  options.merge = !no_merge;
  options.perturb_epsilon = parse_perturb(args.perturb);
  options.perturb_seed = args.seed;
  pmat::ParametricSolution solution =
      algorithm == "per-cell"
          ? pmat::solve_per_cell(instance.matroid, instance.weights,
                                 instance.box, options)
          : pmat::solve_pivot(instance.matroid, instance.weights, instance.box,
                              options);
  write_output(args.out_path,
               pmat::io::canonical_dump(pmat::io::solution_to_json(solution, instance)));
  return kExitOk;
}

int run_wsd(const CommonArgs& args) {
  pmat::io::InstanceDocument instance = load_instance(args);
  require_costs(instance);
  pmat::WsdOptions options;
  options.perturb_epsilon = parse_perturb(args.perturb);
  options.perturb_seed = args.seed;
  pmat::WsdSolution solution =
      pmat::decompose_weight_set(instance.matroid, instance.costs, options);
  write_output(args.out_path,
               pmat::io::canonical_dump(pmat::io::wsd_to_json(solution, instance)));
  return kExitOk;
}

int run_interdict(const CommonArgs& args, const std::string& rank_drop) {
  pmat::io::InstanceDocument instance = load_instance(args);
  require_weights(instance);
  pmat::InterdictionOptions options;
  options.rank_drop = rank_drop == "strict" ? pmat::RankDropPolicy::strict
                                            : pmat::RankDropPolicy::permissive;
  options.perturb_epsilon = parse_perturb(args.perturb);
  options.perturb_seed = args.seed;
  pmat::InterdictionSolution solution = pmat::solve_interdiction(
      instance.matroid, instance.weights, instance.box, options);
  write_output(
      args.out_path,
      pmat::io::canonical_dump(pmat::io::interdiction_to_json(solution, instance)));
  return kExitOk;
}

int run_verify(const CommonArgs& args, const std::string& target, int samples,
               const std::string& algorithm) {
  pmat::io::InstanceDocument instance = load_instance(args);
  require_weights(instance);
  // Perturbation is applied once here so the solver and the brute-force
  // oracle audit the same (perturbed) problem.
  pmat::WeightVector weights = instance.weights;
  if (auto epsilon = parse_perturb(args.perturb))
    weights = pmat::perturb_weights(weights, args.seed, *epsilon);
  pmat::oracle::AuditReport report;
  if (target == "interdict") {
    pmat::InterdictionSolution solution = pmat::solve_interdiction(
        instance.matroid, weights, instance.box, {});
    if (solution.infinite_everywhere) {
      std::cout << "interdiction value infinite everywhere (element "
                << instance.label(*solution.infinite_everywhere)
                << "); nothing to audit\n";
      return kExitOk;
    }
    report = pmat::oracle::sample_audit(solution, instance.matroid, weights,
                                        samples, args.seed);
  } else {
    pmat::ParametricSolution solution =
        algorithm == "per-cell"
            ? pmat::solve_per_cell(instance.matroid, weights, instance.box, {})
            : pmat::solve_pivot(instance.matroid, weights, instance.box, {});
    report = pmat::oracle::sample_audit(solution, instance.matroid, weights,
                                        samples, args.seed);
  }
  for (const pmat::oracle::AuditMismatch& miss : report.mismatches) {
    std::cout << "mismatch at (";
    for (Eigen::Index i = 0; i < miss.point.size(); ++i)
      std::cout << (i ? ", " : "") << pmat::to_string(miss.point[i]);
    std::cout << "): expected " << miss.expected << ", got " << miss.actual << "\n";
  }
  std::cout << (report.passed() ? "audit passed" : "audit FAILED") << " ("
            << report.samples << " samples)\n";
  return report.passed() ? kExitOk : kExitAuditFailure;
}

int run_export_plot(const CommonArgs& args, const std::string& target) {
  pmat::io::InstanceDocument instance = load_instance(args);
  std::string csv;
  if (target == "wsd") {
    require_costs(instance);
    csv = pmat::io::plot_csv(pmat::decompose_weight_set(instance.matroid, instance.costs));
  } else if (target == "interdict") {
    require_weights(instance);
    csv = pmat::io::plot_csv(pmat::solve_interdiction(instance.matroid,
                                                      instance.weights, instance.box));
  } else {
    require_weights(instance);
    csv = pmat::io::plot_csv(
        pmat::solve_pivot(instance.matroid, instance.weights, instance.box));
  }
  write_output(args.out_path, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for the p-parametric matroid problem, weight set "
               "decomposition and matroid one-interdiction"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string algorithm = "pivot";
  std::string rank_drop = "permissive";
  std::string target = "solve";
  bool no_merge = false;
  int samples = 100;

  auto add_common = [&args](CLI::App* cmd, bool with_out = true) {
    cmd->add_option("instance", args.instance_path, "instance JSON file")
        ->required();
    cmd->add_option("--perturb", args.perturb,
                    "perturbation epsilon (rational, e.g. 2^-20)");
    cmd->add_option("--seed", args.seed, "seed for perturbation and sampling");
    if (with_out)
      cmd->add_option("--out", args.out_path, "output path (default stdout)");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve the parametric matroid problem");
  add_common(solve);
  solve->add_option("--algorithm", algorithm, "pivot (default) or per-cell")
      ->check(CLI::IsMember({"pivot", "per-cell"}));
  solve->add_flag("--no-merge", no_merge, "keep one region per cell");

  CLI::App* wsd = app.add_subcommand("wsd", "weight set decomposition");
  add_common(wsd);

  CLI::App* interdict = app.add_subcommand("interdict", "one-interdiction problem");
  add_common(interdict);
  interdict->add_option("--rank-drop", rank_drop, "strict or permissive (default)")
      ->check(CLI::IsMember({"strict", "permissive"}));

  CLI::App* check = app.add_subcommand("check", "report assumption violations");
  add_common(check, false);

  CLI::App* verify = app.add_subcommand("verify", "audit a solution against brute force");
  add_common(verify, false);
  verify->add_option("--samples", samples, "number of sample points");
  verify->add_option("--target", target, "solve (default) or interdict")
      ->check(CLI::IsMember({"solve", "interdict"}));
  verify->add_option("--algorithm", algorithm, "pivot (default) or per-cell")
      ->check(CLI::IsMember({"pivot", "per-cell"}));

  CLI::App* export_plot = app.add_subcommand("export-plot", "CSV boundary segments");
  add_common(export_plot);
  export_plot->add_option("--target", target, "solve (default), wsd or interdict")
      ->check(CLI::IsMember({"solve", "wsd", "interdict"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(args, algorithm, no_merge);
    if (wsd->parsed()) return run_wsd(args);
    if (interdict->parsed()) return run_interdict(args, rank_drop);
    if (check->parsed()) return run_check(args);
    if (verify->parsed()) return run_verify(args, target, samples, algorithm);
    if (export_plot->parsed()) return run_export_plot(args, target);
  } catch (const pmat::DegeneracyError& err) {
    std::cerr << "degenerate instance: " << err.what() << "\n";
    return kExitDegenerate;
  } catch (const pmat::RankDropError& err) {
    std::cerr << "rank drop under strict policy: " << err.what() << "\n";
    return kExitDegenerate;
  } catch (const pmat::oracle::CapError& err) {
    std::cerr << "oracle infeasible: " << err.what() << "\n";
    return kExitDegenerate;
  } catch (const pmat::InputError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
