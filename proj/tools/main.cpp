// zecap: noncommutative graphs, independence numbers, and additivity
// certificates for zero-error channel capacities.

#include "zecap/demo.hpp"
#include "zecap/io.hpp"
#include "zecap/version.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace zecap;

struct CliError {
  int code;
  std::string message;
};

void emit(const Json& report, const std::string& output_path) {
  const std::string text = report.dump(2) + "\n";
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw CliError{1, "cannot write to " + output_path};
  }
  out << text;
}

NoncommutativeGraph load_graph(const std::string& path, const SearchOptions& opts) {
  ParsedInput in = parse_input_file(path, opts.tol);
  if (auto* ch = std::get_if<KrausChannel>(&in)) {
    return graph_of_channel(*ch, opts.tol);
  }
  if (auto* g = std::get_if<NoncommutativeGraph>(&in)) {
    return std::move(*g);
  }
  if (auto* bg = std::get_if<BlockGraph>(&in)) {
    return assemble_block(*bg, opts.tol);
  }
  throw CliError{1, "unsupported input type in " + path};
}

// A subspace document for rank-one analysis: a graph file, or the permissive
// {"rows": r, "cols": c, "basis": [...]} form for rectangular subspaces.
OperatorSubspace load_subspace(const std::string& path, const SearchOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    throw CliError{1, "cannot open file: " + path};
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw CliError{1, path + ": " + e.what()};
  }
  Index rows = 0, cols = 0;
  if (j.contains("dim")) {
    rows = cols = j.at("dim").get<Index>();
  } else if (j.contains("rows") && j.contains("cols")) {
    rows = j.at("rows").get<Index>();
    cols = j.at("cols").get<Index>();
  } else {
    throw CliError{1, path + ": expected 'dim' or 'rows'/'cols'"};
  }
  if (!j.contains("basis") || !j.at("basis").is_array()) {
    throw CliError{1, path + ": expected a 'basis' array"};
  }
  std::vector<Mat> mats;
  for (const Json& b : j.at("basis")) {
    mats.push_back(matrix_from_json(b));
  }
  return orthonormalize_span(mats, rows, cols, opts.tol);
}

int run(int argc, char** argv) {
  CLI::App app{"noncommutative graph analysis of zero-error channel capacities"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand arguments

  SearchOptions opts;
  Index max_tensor_dim = 16;
  std::string output_path;
  app.add_option("--tol-orth", opts.tol.orth, "orthogonality residual cutoff");
  app.add_option("--tol-rank", opts.tol.rank, "relative singular value cutoff");
  app.add_option("--tol-converge", opts.tol.converge, "search stall cutoff");
  app.add_option("--seed", opts.seed, "master seed for all searches");
  app.add_option("--restarts", opts.restarts, "search restarts")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", opts.max_iter, "iterations per restart")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-tensor-dim", max_tensor_dim, "ambient cap for probe tensors");
  app.add_option("-o,--output", output_path, "report path (default stdout)");

  auto* zoo_cmd = app.add_subcommand("zoo", "write a built-in channel as a channel file");
  std::string zoo_name;
  std::optional<double> zoo_param;
  zoo_cmd->add_option("name", zoo_name, "one of: weyl, dephasing-bitflip, depolarizing, c2c2-sum, c2c2-sum-raw, c4c2-sum")
      ->required();
  zoo_cmd->add_option("param", zoo_param, "dimension (weyl) or probability (depolarizing)");

  auto* build_cmd = app.add_subcommand("build-graph", "extract the noncommutative graph of a channel");
  std::string build_input;
  bool skip_validation = false;
  build_cmd->add_option("channel", build_input, "channel file")->required();
  build_cmd->add_flag("--unvalidated", skip_validation, "skip the trace-preservation check");

  auto* alpha_cmd = app.add_subcommand("alpha", "independence number of a graph (or of a channel's graph)");
  std::string alpha_input;
  alpha_cmd->add_option("input", alpha_input, "graph or channel file")->required();

  auto* rank_cmd = app.add_subcommand("rank-one", "search an operator subspace for rank-one elements");
  std::string rank_input;
  bool rank_complement = false;
  rank_cmd->add_option("input", rank_input, "graph file or {rows, cols, basis} subspace file")
      ->required();
  rank_cmd->add_flag("--complement", rank_complement, "analyze the orthogonal complement instead");

  auto* block_cmd = app.add_subcommand("block-alpha", "independence number of a block graph");
  std::string block_input;
  block_cmd->add_option("input", block_input, "block file")->required();

  auto* add_cmd = app.add_subcommand("additivity", "additivity certificate for a pair of graphs");
  std::string add_left, add_right;
  bool add_any = false;
  add_cmd->add_option("left", add_left, "graph or channel file")->required();
  add_cmd->add_option("right", add_right, "graph or channel file");
  add_cmd->add_flag("--any", add_any, "certify against every partner graph");

  auto* probe_cmd = app.add_subcommand("probe", "numeric multiplicativity probe for a pair of graphs");
  std::string probe_left, probe_right;
  probe_cmd->add_option("left", probe_left, "graph or channel file")->required();
  probe_cmd->add_option("right", probe_right, "graph or channel file")->required();

  auto* demo_cmd = app.add_subcommand("demo", "run the bundled regression suite");
  std::string demo_suite;
  demo_cmd->add_option("suite", demo_suite, "suite name (paper)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  opts.check();

  if (zoo_cmd->parsed()) {
    const KrausChannel ch = zoo(zoo_name, zoo_param);
    emit(channel_to_json(ch), output_path);
    return 0;
  }
  if (build_cmd->parsed()) {
    ParsedInput in = parse_input_file(build_input, opts.tol);
    auto* ch = std::get_if<KrausChannel>(&in);
    if (ch == nullptr) {
      throw CliError{1, build_input + " is not a channel file"};
    }
    emit(graph_to_json(graph_of_channel(*ch, opts.tol, !skip_validation)), output_path);
    return 0;
  }
  if (alpha_cmd->parsed()) {
    const NoncommutativeGraph g = load_graph(alpha_input, opts);
    const AlphaResult r = alpha_exact(g, opts);
    emit(report_envelope("alpha", opts, alpha_result_to_json(r)), output_path);
    std::cerr << "alpha in [" << r.lower << ", " << r.upper << "]"
              << (r.exact ? " (exact)" : "") << "\n";
    return 0;
  }
  if (rank_cmd->parsed()) {
    OperatorSubspace u = load_subspace(rank_input, opts);
    if (rank_complement) {
      u = complement(u);
    }
    const RankOneVerdict v = find_rank_one(u, opts);
    emit(report_envelope("rank-one", opts, rank_one_to_json(v)), output_path);
    std::cerr << "status: " << to_string(v.status) << "\n";
    return 0;
  }
  if (block_cmd->parsed()) {
    ParsedInput in = parse_input_file(block_input, opts.tol);
    auto* bg = std::get_if<BlockGraph>(&in);
    if (bg == nullptr) {
      throw CliError{1, block_input + " is not a block file"};
    }
    const AlphaResult r = block_alpha(*bg, opts);
    emit(report_envelope("block-alpha", opts, alpha_result_to_json(r)), output_path);
    std::cerr << "alpha in [" << r.lower << ", " << r.upper << "]"
              << (r.exact ? " (exact)" : "") << "\n";
    return 0;
  }
  if (add_cmd->parsed()) {
    const NoncommutativeGraph left = load_graph(add_left, opts);
    AdditivityCertificate cert;
    if (add_any) {
      if (!add_right.empty()) {
        std::cerr << "error: give either a right operand or --any, not both\n";
        return 2;
      }
      cert = check_additivity(left, any_graph, opts);
    } else {
      if (add_right.empty()) {
        std::cerr << "error: additivity needs a right operand or --any\n";
        return 2;
      }
      const NoncommutativeGraph right = load_graph(add_right, opts);
      cert = check_additivity(left, right, opts);
    }
    emit(report_envelope("additivity", opts, certificate_to_json(cert)), output_path);
    std::cerr << "verdict: " << to_string(cert.verdict) << " (" << to_string(cert.rule) << ")\n";
    return 0;
  }
  if (probe_cmd->parsed()) {
    const NoncommutativeGraph left = load_graph(probe_left, opts);
    const NoncommutativeGraph right = load_graph(probe_right, opts);
    const ProbeReport r = numeric_multiplicativity_probe(left, right, opts, max_tensor_dim);
    emit(report_envelope("probe", opts, probe_to_json(r)), output_path);
    std::cerr << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
    return 0;
  }
  if (demo_cmd->parsed()) {
    if (demo_suite != "paper") {
      std::cerr << "error: unknown suite '" << demo_suite << "' (expected: paper)\n";
      return 2;
    }
    const DemoReport report = run_regression_demo(opts);
    emit(demo_report_to_json(report, opts), output_path);
    for (const DemoScenario& s : report.scenarios) {
      std::cerr << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.summary << "\n";
    }
    std::cerr << (report.all_pass ? "all scenarios passed" : "SOME SCENARIOS FAILED") << "\n";
    return report.all_pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
