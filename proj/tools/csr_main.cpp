// csr: simulate, solve, and check capacitated selfish replication games.
//
// Subcommands: gen, run-lbr, run-ebr, verify-ne, brute-optimal, brute-ne,
// poa, bounds, bench, export-dot. Exit codes: 0 success, 1 validation error,
// 2 budget or step-cap exhaustion.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "csr/analysis.hpp"
#include "csr/dynamics.hpp"
#include "csr/game.hpp"
#include "csr/graph.hpp"
#include "csr/io.hpp"
#include "csr/rng.hpp"
#include "csr/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitExhausted = 2;

struct InitOptions {
  std::string alloc_list;   // explicit "--alloc 0,1,0"
  std::string policy;       // all-zero | round-robin | random
  std::uint64_t seed = 0;
};

csr::Allocation initial_allocation(const csr::Instance& inst, const csr::InstanceFile& file,
                                   const InitOptions& options) {
  if (!options.alloc_list.empty()) {
    csr::Allocation alloc = csr::parse_allocation_list(options.alloc_list);
    csr::validate_allocation(inst, alloc);
    return alloc;
  }
  const int n = inst.graph.node_count();
  const int k = inst.resource_count;
  if (options.policy == "all-zero") return csr::Allocation(n, 0);
  if (options.policy == "round-robin") {
    csr::Allocation alloc(n);
    for (int i = 0; i < n; ++i) alloc[i] = i % k;
    return alloc;
  }
  if (options.policy == "random") {
    auto rng = csr::make_rng(options.seed);
    return csr::uniform_random_allocation(inst, rng);
  }
  if (!options.policy.empty())
    throw std::invalid_argument("unknown init policy '" + options.policy + "'");
  if (file.init) return *file.init;
  csr::Allocation alloc(n);
  for (int i = 0; i < n; ++i) alloc[i] = i % k;
  return alloc;
}

csr::Instance load_instance(const std::string& path, csr::InstanceFile& file) {
  file = csr::load_instance_file(path);
  csr::Instance inst = csr::to_instance(file);
  if (inst.resources_exceed_nodes())
    std::cerr << "warning: k > n, some resource is always missing\n";
  return inst;
}

void add_init_flags(CLI::App* cmd, InitOptions& options) {
  cmd->add_option("--alloc", options.alloc_list, "explicit initial allocation, e.g. 0,1,0");
  cmd->add_option("--init", options.policy, "initial allocation policy")
      ->check(CLI::IsMember({"all-zero", "round-robin", "random"}));
  cmd->add_option("--seed", options.seed, "seed for --init random");
}

int run_dynamics(const std::string& instance_path, const InitOptions& init,
                 bool ebr, double epsilon, long long max_steps,
                 const std::string& trace_path, const std::string& final_path) {
  csr::InstanceFile file;
  const csr::Instance inst = load_instance(instance_path, file);
  const csr::Allocation start = initial_allocation(inst, file, init);
  const csr::DynamicsResult result =
      ebr ? csr::run_ebr(inst, start, epsilon, max_steps)
          : csr::run_lbr(inst, start, max_steps);
  if (!trace_path.empty()) csr::write_trace_csv_file(result.trace, trace_path);
  if (!final_path.empty()) {
    std::ofstream out(final_path);
    if (!out) throw std::runtime_error("cannot write " + final_path);
    out << csr::format_allocation_list(result.final_allocation) << "\n";
  }
  std::cout << "steps: " << result.trace.steps_taken() << "\n"
            << "terminated: " << (result.trace.terminated ? "true" : "false") << "\n"
            << "final_cost: " << csr::social_cost(inst, result.final_allocation) << "\n"
            << "final_alloc: " << csr::format_allocation_list(result.final_allocation) << "\n";
  return result.trace.terminated ? kExitOk : kExitExhausted;
}

json report_to_json(const csr::EquilibriumReport& report) {
  return json{{"optimal_cost", report.optimal_cost},
              {"optimal_profile", report.optimal_profile},
              {"ne_count", report.ne_count},
              {"ne_min_cost", report.ne_min_cost},
              {"ne_max_cost", report.ne_max_cost},
              {"poa", report.poa}};
}

int run_bench(const std::string& config_path, const std::string& out_path);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacitated selfish replication games: dynamics, exact solving, bounds"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  csr::FamilySpec family;
  int gen_k = 0;
  std::string gen_out;
  gen->add_option("--family", family.family, "family name")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "clique", "star", "random_tree",
                             "gnp_connected", "poa_example"}));
  gen->add_option("--n", family.n, "node count");
  gen->add_option("--m", family.m, "poa_example group size");
  gen->add_option("--k", gen_k, "resource count (also the poa_example family k)");
  gen->add_option("--p", family.p, "gnp edge probability");
  gen->add_option("--seed", family.seed, "generator seed");
  gen->add_option("--max-retries", family.max_retries, "gnp connectivity retries");
  gen->add_option("-o,--output", gen_out, "output instance file")->required();

  // run-lbr / run-ebr
  struct RunFlags {
    std::string instance;
    InitOptions init;
    long long max_steps = -1;
    std::string trace_path;
    std::string final_path;
    double epsilon = csr::kDefaultEpsilon;
  };
  RunFlags lbr_flags, ebr_flags;
  auto add_run_flags = [](CLI::App* cmd, RunFlags& flags) {
    cmd->add_option("instance", flags.instance, "instance file")->required();
    add_init_flags(cmd, flags.init);
    cmd->add_option("--max-steps", flags.max_steps, "step cap (default: analysis bound)");
    cmd->add_option("-o,--trace", flags.trace_path, "trace CSV output path");
    cmd->add_option("--final", flags.final_path, "final allocation output path");
  };
  auto* run_lbr = app.add_subcommand("run-lbr", "run least-best-response dynamics");
  add_run_flags(run_lbr, lbr_flags);
  auto* run_ebr = app.add_subcommand("run-ebr", "run epsilon-best-response dynamics");
  add_run_flags(run_ebr, ebr_flags);
  run_ebr->add_option("--epsilon", ebr_flags.epsilon, "radius growth factor (> 1)")
      ->required();

  // verify-ne
  auto* verify = app.add_subcommand("verify-ne", "check whether an allocation is a pure NE");
  std::string verify_instance;
  InitOptions verify_init;
  verify->add_option("instance", verify_instance, "instance file")->required();
  add_init_flags(verify, verify_init);

  // brute-optimal / brute-ne / poa
  std::string solve_instance;
  long long budget = csr::kDefaultEnumerationBudget;
  bool list_nash = false;
  std::string poa_out;
  auto* brute_optimal = app.add_subcommand("brute-optimal", "exact optimal allocation");
  brute_optimal->add_option("instance", solve_instance)->required();
  brute_optimal->add_option("--budget", budget, "enumeration budget");
  auto* brute_ne = app.add_subcommand("brute-ne", "enumerate pure Nash equilibria");
  brute_ne->add_option("instance", solve_instance)->required();
  brute_ne->add_option("--budget", budget, "enumeration budget");
  brute_ne->add_flag("--list", list_nash, "print every equilibrium profile");
  auto* poa = app.add_subcommand("poa", "optimal + NE enumeration + price of anarchy");
  poa->add_option("instance", solve_instance)->required();
  poa->add_option("--budget", budget, "enumeration budget");
  poa->add_option("-o,--output", poa_out, "write the report JSON here instead of stdout");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "random-allocation cost bound report");
  std::string bounds_instance;
  long long mc_samples = 0;
  std::uint64_t mc_seed = 0;
  bounds->add_option("instance", bounds_instance)->required();
  bounds->add_option("--samples", mc_samples, "Monte Carlo sample count (0 = exact only)");
  bounds->add_option("--seed", mc_seed, "Monte Carlo seed");

  // bench
  auto* bench = app.add_subcommand("bench", "batch runs from a config file");
  std::string bench_config, bench_out;
  bench->add_option("--config", bench_config, "bench config JSON")->required();
  bench->add_option("-o,--output", bench_out, "results CSV path")->required();

  // export-dot
  auto* export_dot = app.add_subcommand("export-dot", "Graphviz export");
  std::string dot_instance, dot_out;
  InitOptions dot_init;
  export_dot->add_option("instance", dot_instance)->required();
  add_init_flags(export_dot, dot_init);
  export_dot->add_option("-o,--output", dot_out, "dot output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (gen->parsed()) {
      if (family.family == "poa_example") {
        if (gen_k < 2) throw std::invalid_argument("poa_example: --k must be >= 2");
        family.k = gen_k;
      } else if (gen_k < 1) {
        throw std::invalid_argument("gen: --k (resource count) must be >= 1");
      }
      const csr::Graph graph = csr::generate(family);
      json params;
      if (family.family == "poa_example") {
        params = {{"m", family.m}, {"k", family.k}};
      } else {
        params = {{"n", family.n}};
        if (family.family == "gnp_connected") params["p"] = family.p;
      }
      const json meta = {{"family", family.family}, {"params", params}, {"seed", family.seed}};
      csr::Instance inst(graph, gen_k);
      csr::save_instance_file(csr::from_instance(inst, std::nullopt, meta), gen_out);
      std::cout << "wrote " << gen_out << " (n=" << graph.node_count()
                << ", k=" << gen_k << ", D=" << graph.diameter() << ")\n";
      return kExitOk;
    }

    if (run_lbr->parsed())
      return run_dynamics(lbr_flags.instance, lbr_flags.init, false, 0.0, lbr_flags.max_steps,
                          lbr_flags.trace_path, lbr_flags.final_path);
    if (run_ebr->parsed())
      return run_dynamics(ebr_flags.instance, ebr_flags.init, true, ebr_flags.epsilon,
                          ebr_flags.max_steps, ebr_flags.trace_path, ebr_flags.final_path);

    if (verify->parsed()) {
      csr::InstanceFile file;
      const csr::Instance inst = load_instance(verify_instance, file);
      const csr::Allocation alloc = initial_allocation(inst, file, verify_init);
      const auto deviation = csr::find_deviation(inst, alloc);
      if (!deviation) {
        std::cout << "NE: true\n";
      } else {
        std::cout << "NE: false (player " << deviation->player << " -> resource "
                  << deviation->resource << ", gain " << deviation->cost_gain << ")\n";
      }
      return kExitOk;
    }

    if (brute_optimal->parsed()) {
      csr::InstanceFile file;
      const csr::Instance inst = load_instance(solve_instance, file);
      const csr::OptimalSearch best = csr::brute_force_optimal(inst, budget);
      std::cout << "optimal_cost: " << best.cost << "\n"
                << "optimal_profile: " << csr::format_allocation_list(best.profile) << "\n";
      return kExitOk;
    }

    if (brute_ne->parsed()) {
      csr::InstanceFile file;
      const csr::Instance inst = load_instance(solve_instance, file);
      const csr::NashEnumeration nash = csr::enumerate_nash(inst, budget, list_nash);
      std::cout << "ne_count: " << nash.count << "\n"
                << "ne_min_cost: " << nash.min_cost << "\n"
                << "ne_max_cost: " << nash.max_cost << "\n";
      if (list_nash)
        for (const auto& profile : nash.profiles)
          std::cout << csr::format_allocation_list(profile) << "\n";
      return kExitOk;
    }

    if (poa->parsed()) {
      csr::InstanceFile file;
      const csr::Instance inst = load_instance(solve_instance, file);
      const json doc = report_to_json(csr::price_of_anarchy(inst, budget));
      if (poa_out.empty()) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::ofstream out(poa_out);
        if (!out) throw std::runtime_error("cannot write " + poa_out);
        out << doc.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (bounds->parsed()) {
      csr::InstanceFile file;
      const csr::Instance inst = load_instance(bounds_instance, file);
      const csr::BoundReport exact = csr::exact_uniform_cost_report(inst);
      json doc = {{"bound", exact.bound_value},
                  {"exact_expected_cost", exact.exact_or_estimate},
                  {"exact_satisfied", exact.satisfied}};
      if (mc_samples > 0) {
        const csr::BoundReport mc = csr::monte_carlo_uniform_cost(inst, mc_samples, mc_seed);
        doc["mc_mean"] = mc.exact_or_estimate;
        doc["mc_stderr"] = mc.standard_error;
        doc["mc_samples"] = mc.samples;
        doc["mc_satisfied"] = mc.satisfied;
      }
      std::cout << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (bench->parsed()) return run_bench(bench_config, bench_out);

    if (export_dot->parsed()) {
      csr::InstanceFile file;
      const csr::Instance inst = load_instance(dot_instance, file);
      if (!dot_init.alloc_list.empty() || !dot_init.policy.empty() || file.init) {
        const csr::Allocation alloc = initial_allocation(inst, file, dot_init);
        csr::write_dot_file(inst.graph, &alloc, dot_out);
      } else {
        csr::write_dot_file(inst.graph, nullptr, dot_out);
      }
      std::cout << "wrote " << dot_out << "\n";
      return kExitOk;
    }
  } catch (const csr::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

namespace {

int run_bench(const std::string& config_path, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot open bench config: " + config_path);
  json config;
  try {
    config = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bench config: not valid JSON: ") + e.what());
  }
  if (config.value("version", "") != std::string("csr-bench-v1"))
    throw std::invalid_argument("bench config: field 'version' must be \"csr-bench-v1\"");
  if (!config.contains("runs") || !config.at("runs").is_array())
    throw std::invalid_argument("bench config: field 'runs' must be an array");

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << "row,family,n,k,diameter,seed,algorithm,epsilon,init,steps,terminated,final_cost\n";

  bool all_terminated = true;
  int row = 0;
  for (const json& run : config.at("runs")) {
    csr::FamilySpec family;
    family.family = run.value("family", "");
    family.n = run.value("n", 0);
    family.m = run.value("m", 0);
    family.k = run.value("k", 0);
    family.p = run.value("p", 0.0);
    const std::uint64_t seed = run.value("seed", 0ULL);
    family.seed = csr::mix_seed(seed, 0);
    family.max_retries = run.value("max_retries", 100);
    const csr::Graph graph = csr::generate(family);

    const int k = run.value("k", 2);
    const csr::Instance inst(graph, k);

    InitOptions init;
    init.policy = run.value("init", "round-robin");
    init.seed = csr::mix_seed(seed, 1);
    const csr::InstanceFile no_file;
    const csr::Allocation start = initial_allocation(inst, no_file, init);

    const std::string algorithm = run.value("algorithm", "lbr");
    const long long max_steps = run.value("max_steps", -1LL);
    const double epsilon = run.value("epsilon", csr::kDefaultEpsilon);
    csr::DynamicsResult result;
    if (algorithm == "ebr") {
      result = csr::run_ebr(inst, start, epsilon, max_steps);
    } else if (algorithm == "lbr") {
      result = csr::run_lbr(inst, start, max_steps);
    } else {
      throw std::invalid_argument("bench config: unknown algorithm '" + algorithm + "'");
    }
    all_terminated = all_terminated && result.trace.terminated;

    out << row << ',' << family.family << ',' << graph.node_count() << ',' << k << ','
        << graph.diameter() << ',' << seed << ',' << algorithm << ','
        << (algorithm == "ebr" ? csr::format_real(epsilon) : std::string()) << ','
        << init.policy << ',' << result.trace.steps_taken() << ','
        << (result.trace.terminated ? 1 : 0) << ','
        << csr::social_cost(inst, result.final_allocation) << '\n';
    ++row;
  }
  out.close();
  std::cout << "wrote " << out_path << " (" << row << " rows)\n";
  return all_terminated ? kExitOk : kExitExhausted;
}

}  // namespace
