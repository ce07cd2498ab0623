#include "gcontract/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "gcontract/audit.hpp"
#include "gcontract/beta.hpp"
#include "gcontract/experiment.hpp"
#include "gcontract/fibonacci.hpp"
#include "gcontract/generators.hpp"
#include "gcontract/io.hpp"
#include "gcontract/oracle.hpp"

namespace gcontract {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Streams& io) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file)
    throw GraphError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, Streams& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw GraphError("cannot write " + path);
  file << text;
}

const std::map<std::string, Scratchpad> kScratchpads{{"faithful", Scratchpad::faithful},
                                                     {"epoch", Scratchpad::epoch}};

struct ContractArgs {
  std::string input;
  std::string out;
  std::string stats;
  bool trace = false;
  std::optional<std::uint64_t> permute_seed;
  Scratchpad scratchpad = Scratchpad::faithful;
};

int do_contract(const ContractArgs& args, Streams& io) {
  auto g = parse_graph_string(read_input(args.input, io));
  if (args.permute_seed)
    g = permute_enumeration(g, *args.permute_seed).graph;
  ContractOptions options;
  options.trace = args.trace;
  options.scratchpad = args.scratchpad;
  const auto result = contract_to_fixpoint(g, options);

  if (!args.out.empty())
    write_output(args.out, serialize_graph(result.graph), io);
  else if (args.stats != "-")
    io.out << serialize_graph(result.graph);
  if (!args.stats.empty()) {
    auto doc = stats_json(g, result);
    if (args.permute_seed)
      doc["permute_seed"] = *args.permute_seed;
    write_output(args.stats, doc.dump(2) + "\n", io);
  }
  return kExitOk;
}

int do_verify(const std::string& input, const std::vector<std::uint64_t>& seeds, Streams& io) {
  const auto g = parse_graph_string(read_input(input, io));
  const auto oracle = eval_colour_partition(g);
  bool ok = true;

  ContractOptions options;
  options.trace = true;
  const auto result = contract_to_fixpoint(g, options);
  const bool equivalent = equivalent_contractions(g, result, oracle);
  const auto issues = audit_contraction(g, result);
  io.out << "identity: iterations=" << result.trace.iterations
         << " bound=" << golden_ratio_bound(g.order()) << " final_n=" << result.graph.order()
         << " oracle_blocks=" << oracle.blocks.size() << ' '
         << (equivalent && issues.empty() ? "PASS" : "FAIL") << '\n';
  for (const auto& issue : issues)
    io.out << "  " << issue << '\n';
  ok = ok && equivalent && issues.empty();

  for (std::uint64_t seed : seeds) {
    const auto permuted = permute_enumeration(g, seed);
    const auto presult = contract_to_fixpoint(permuted.graph);
    // Pull the total map back to the original labels before comparing.
    ContractionResult pulled{presult.graph, presult.trace};
    for (Vertex v = 0; v < g.order(); ++v)
      pulled.trace.total_map[v] = presult.trace.total_map[permuted.permutation[v]];
    const bool peq = equivalent_contractions(g, pulled, oracle);
    const bool within = presult.trace.iterations <= golden_ratio_bound(g.order());
    io.out << "seed " << seed << ": iterations=" << presult.trace.iterations << ' '
           << (peq && within ? "PASS" : "FAIL") << '\n';
    ok = ok && peq && within;
  }
  io.out << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  return ok ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Colour contraction of vertex-coloured graphs", "gcontract"};
  app.require_subcommand(1);

  ContractArgs contract;
  auto* contract_cmd = app.add_subcommand("contract", "Contract a graph to its colour quotient");
  contract_cmd->add_option("input", contract.input, "Graph file or - for stdin")->required();
  contract_cmd->add_option("--out", contract.out, "Write the contracted graph here");
  contract_cmd->add_option("--stats", contract.stats, "Write JSON stats here (- for stdout)");
  contract_cmd->add_flag("--trace", contract.trace, "Record per-iteration maps in the stats");
  contract_cmd->add_option("--permute-seed", contract.permute_seed,
                           "Relabel vertices randomly before contracting");
  contract_cmd->add_option("--scratchpad", contract.scratchpad, "faithful or epoch")
      ->transform(CLI::CheckedTransformer(kScratchpads, CLI::ignore_case));

  std::string oracle_input, oracle_out = "-";
  auto* oracle_cmd = app.add_subcommand("oracle", "One-shot reference colour contraction");
  oracle_cmd->add_option("input", oracle_input)->required();
  oracle_cmd->add_option("--out", oracle_out);

  std::string verify_input;
  std::vector<std::uint64_t> verify_seeds{1, 2, 3};
  auto* verify_cmd =
      app.add_subcommand("verify", "Check the iterative contraction against the reference");
  verify_cmd->add_option("input", verify_input)->required();
  verify_cmd->add_option("--seeds", verify_seeds, "Permutation seeds to also check");

  auto* gen_cmd = app.add_subcommand("gen", "Generate graphs");
  gen_cmd->require_subcommand(1);
  std::size_t fib_level = 0;
  bool fib_roles = false;
  std::string gen_out = "-";
  auto* fib_cmd = gen_cmd->add_subcommand("fib", "Worst-case Fibonacci instance");
  fib_cmd->add_option("--level", fib_level)->required()->check(CLI::Range(std::size_t{0}, kMaxFibLevel));
  fib_cmd->add_flag("--roles", fib_roles, "Emit a role comment line");
  fib_cmd->add_option("--out", gen_out);

  std::size_t rand_n = 0;
  std::optional<std::uint64_t> rand_m;
  std::optional<double> rand_p;
  std::uint32_t rand_colours = 1;
  std::uint64_t rand_seed = 0;
  auto* random_cmd = gen_cmd->add_subcommand("random", "Seeded Erdos-Renyi graph");
  random_cmd->add_option("--n", rand_n)->required();
  auto* m_opt = random_cmd->add_option("--m", rand_m);
  auto* p_opt = random_cmd->add_option("--p", rand_p)->check(CLI::Range(0.0, 1.0));
  m_opt->excludes(p_opt);
  random_cmd->add_option("--colours", rand_colours)->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", rand_seed)->required();
  random_cmd->add_option("--out", gen_out);

  std::string dot_input, dot_out = "-";
  bool dot_roles = false;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  dot_cmd->add_option("input", dot_input)->required();
  dot_cmd->add_flag("--roles", dot_roles, "Style vertices by the role comment");
  dot_cmd->add_option("--out", dot_out);

  ExperimentConfig bench;
  bool bench_serial = false;
  std::string bench_out = "-";
  auto* bench_cmd = app.add_subcommand("bench", "Iteration counts over seeded random graphs");
  bench_cmd->add_option("--n", bench.n)->required();
  bench_cmd->add_option("--m", bench.m)->required();
  bench_cmd->add_option("--colours", bench.colours)->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seeds", bench.seeds)->required();
  bench_cmd->add_option("--first-seed", bench.first_seed);
  bench_cmd->add_option("--scratchpad", bench.scratchpad)
      ->transform(CLI::CheckedTransformer(kScratchpads, CLI::ignore_case));
  bench_cmd->add_flag("--serial", bench_serial, "Run seeds one after another");
  bench_cmd->add_option("--out", bench_out);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*contract_cmd)
      return do_contract(contract, io);

    if (*oracle_cmd) {
      const auto g = parse_graph_string(read_input(oracle_input, io));
      write_output(oracle_out, serialize_graph(simple_gamma_contraction(g).graph), io);
      return kExitOk;
    }

    if (*verify_cmd)
      return do_verify(verify_input, verify_seeds, io);

    if (*fib_cmd) {
      const auto inst = generate_fib_instance(fib_level);
      std::string text = "# fibonacci worst case, level " + std::to_string(fib_level) + "\n";
      if (fib_roles)
        text += serialize_roles(inst.roles);
      write_output(gen_out, text + serialize_graph(inst.graph), io);
      return kExitOk;
    }

    if (*random_cmd) {
      if (!rand_m && !rand_p) {
        err << "gen random: one of --m or --p is required\n";
        return kExitUsage;
      }
      RandomSpec spec;
      spec.n = rand_n;
      spec.colour_count = rand_colours;
      spec.seed = rand_seed;
      if (rand_m)
        spec.edges = EdgeCount{*rand_m};
      else
        spec.edges = EdgeProbability{*rand_p};
      write_output(gen_out, serialize_graph(gen_random_coloured(spec)), io);
      return kExitOk;
    }

    if (*dot_cmd) {
      const auto text = read_input(dot_input, io);
      const auto g = parse_graph_string(text);
      std::optional<std::vector<FibRole>> roles;
      if (dot_roles) {
        roles = parse_roles(text);
        if (!roles) {
          err << "export-dot: --roles given but the input has no \"# roles:\" line\n";
          return kExitFailure;
        }
      }
      write_output(dot_out, export_dot(g, roles ? &*roles : nullptr), io);
      return kExitOk;
    }

    if (*bench_cmd) {
      const auto outcomes =
          bench_serial ? run_experiment_serial(bench) : run_experiment_parallel(bench);
      write_output(bench_out, experiment_json(bench, outcomes).dump(2) + "\n", io);
      const bool all_converged = std::all_of(outcomes.begin(), outcomes.end(),
                                             [](const SeedOutcome& o) { return o.converged; });
      return all_converged ? kExitOk : kExitFailure;
    }
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

} // namespace gcontract
