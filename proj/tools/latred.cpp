// Command-line front end: kernel extraction, plain LLL reduction, trace
// analysis, and the K-sweep experiment harness.
//
// Exit codes: 0 success, 1 usage, 2 invalid input, 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "latred/bounds.hpp"
#include "latred/experiment.hpp"
#include "latred/matrix_io.hpp"
#include "latred/ortho.hpp"
#include "latred/potential.hpp"
#include "latred/trace.hpp"

namespace {

using namespace latred;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

BigRat parse_delta(const std::string& text) {
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    return make_rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InputError("malformed delta, expected p/q: " + text);
  }
}

struct KernelArgs {
  std::string matrix_file;
  std::string mode = "general";
  std::string explicit_k;
  unsigned heuristic_c = 1;
  std::string trace_path;
};

int cmd_kernel(const KernelArgs& args) {
  IntMatrix a = load_matrix_file(args.matrix_file);

  KernelOptions opts;
  if (!args.explicit_k.empty()) {
    opts.mode = KMode::Explicit;
    opts.explicit_K = BigInt(args.explicit_k);
  } else if (args.mode == "general") {
    opts.mode = KMode::General;
  } else if (args.mode == "heuristic") {
    opts.mode = KMode::Heuristic;
    opts.heuristic_c = args.heuristic_c;
  } else {
    throw InputError("unknown mode: " + args.mode);
  }
  opts.with_checkpoints = !args.trace_path.empty();

  KernelResult result = orthogonal_lattice_basis(a, opts);
  if (result.sub_threshold)
    std::cerr << "warning: K below the general threshold "
              << threshold_K_general(a).get_str() << "\n";

  KernelReport report = verify_kernel(a, result.kernel);

  if (!args.trace_path.empty()) {
    BoundReport bounds;
    bounds.n = result.n;
    bounds.k = result.k;
    bounds.log_norm_a = log_norm(a);
    bounds.bound_theorem2 = swap_bound_theorem2(result.n, result.k, bounds.log_norm_a);
    bounds.bound_classical = swap_bound_classical(
        result.n, result.k, HiReal::log2(BigRat(result.K_used)), bounds.log_norm_a);
    bounds.bound_potential_min_k = swap_bound_min_over_k(
        build_extended(a, result.K_used).basis, result.reduced_extended);
    bounds.measured_swaps = result.swap_count;
    bounds.principal_minor_nonzero = principal_minor_nonzero(a);
    write_trace_file(
        args.trace_path,
        make_trace_json("kernel", matrix_digest(a), matrix_digest(result.reduced_extended),
                        result.n, result.n + result.k, result.k, result.K_used,
                        make_rat(3, 4), result.trace, bound_report_to_json(bounds)));
  }

  std::cout << format_matrix(result.kernel);
  if (!report.ok()) {
    for (const auto& f : report.failures) std::cerr << "verification: " << f << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

struct ReduceArgs {
  std::string matrix_file;
  std::string delta = "3/4";
  std::string trace_path;
};

int cmd_reduce(const ReduceArgs& args) {
  IntMatrix basis = load_matrix_file(args.matrix_file);
  ReductionOptions opts;
  opts.params.delta = parse_delta(args.delta);
  opts.params.validate();
  opts.with_checkpoints = !args.trace_path.empty();

  ReductionResult result = lll_reduce(basis, opts);

  if (!args.trace_path.empty()) {
    write_trace_file(args.trace_path,
                     make_trace_json("reduce", matrix_digest(basis),
                                     matrix_digest(result.basis), basis.cols(),
                                     basis.rows(), std::nullopt, std::nullopt,
                                     opts.params.delta, result.trace, nullptr));
  }
  std::cout << format_matrix(result.basis);
  return kExitOk;
}

struct AnalyzeArgs {
  std::string trace_file;
  std::string k = "all";
  std::string csv_path;
};

int cmd_analyze(const AnalyzeArgs& args) {
  nlohmann::json doc = load_trace_file(args.trace_file);
  std::optional<std::size_t> k_filter;
  if (args.k != "all") k_filter = static_cast<std::size_t>(std::stoul(args.k));

  TraceAnalysis analysis = analyze_trace(doc, k_filter);
  std::cout << analysis_to_text(analysis);
  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path);
    if (!out) throw InputError("cannot write " + args.csv_path);
    out << analysis_to_csv(analysis);
  }
  return analysis.all_ok() ? kExitOk : kExitVerification;
}

struct ExperimentArgs {
  std::size_t n = 0, k = 0;
  unsigned entry_bits = 8;
  std::uint64_t seed = 0;
  std::size_t sweep = 4;
  std::string out_path;
  std::string matrix_file;
};

int cmd_experiment(const ExperimentArgs& args) {
  ExperimentConfig config;
  config.n = args.n;
  config.k = args.k;
  config.entry_bits = args.entry_bits;
  config.seed = args.seed;
  config.sweep = args.sweep;
  if (!args.matrix_file.empty()) config.fixed_a = load_matrix_file(args.matrix_file);

  const std::string csv = experiment_csv(run_experiment(config));
  if (args.out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw InputError("cannot write " + args.out_path);
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact LLL reduction of orthogonal-lattice embeddings"};
  app.require_subcommand(1);

  KernelArgs kernel_args;
  auto* kernel = app.add_subcommand(
      "kernel", "LLL-reduced basis of the integer kernel of A^T");
  kernel->add_option("matrix", kernel_args.matrix_file, "input matrix file")->required();
  kernel->add_option("--mode", kernel_args.mode, "K selection: general|heuristic");
  kernel->add_option("--K", kernel_args.explicit_k, "explicit scaling parameter");
  kernel->add_option("--c", kernel_args.heuristic_c, "heuristic exponent constant");
  kernel->add_option("--trace", kernel_args.trace_path, "write JSON trace");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "LLL-reduce the columns of a matrix");
  reduce->add_option("matrix", reduce_args.matrix_file, "input matrix file")->required();
  reduce->add_option("--delta", reduce_args.delta, "reduction parameter as p/q");
  reduce->add_option("--trace", reduce_args.trace_path, "write JSON trace");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "check potentials and bounds of a trace");
  analyze->add_option("trace", analyze_args.trace_file, "trace file")->required();
  analyze->add_option("--k", analyze_args.k, "potential index (default: all)");
  analyze->add_option("--csv", analyze_args.csv_path, "write per-k CSV");

  ExperimentArgs exp_args;
  auto* experiment = app.add_subcommand("experiment", "K-sweep swap-count experiment");
  experiment->add_option("--n", exp_args.n, "rows of A");
  experiment->add_option("--k", exp_args.k, "columns of A");
  experiment->add_option("--entry-bits", exp_args.entry_bits, "entries in [-2^b, 2^b]");
  experiment->add_option("--seed", exp_args.seed, "64-bit generator seed");
  experiment->add_option("--K-sweep", exp_args.sweep, "number of doublings of K0");
  experiment->add_option("--out", exp_args.out_path, "CSV output path");
  experiment->add_option("--matrix", exp_args.matrix_file, "use a fixed A instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(kernel_args);
    if (reduce->parsed()) return cmd_reduce(reduce_args);
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (experiment->parsed()) return cmd_experiment(exp_args);
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
