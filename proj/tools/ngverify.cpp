// Command-line front end: corpus sweeps, single-graph parameter tables,
// constructive witnesses, and randomized hypothesis hunts.
//
// Exit codes: 0 clean, 1 violated bound / failed construction, 2 bad usage
// or bad input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dompack/constructions.hpp"
#include "dompack/graph6.hpp"
#include "dompack/verify.hpp"

namespace {

int run_verify(const dompack::CorpusSpec& corpus, const dompack::VerifyOptions& opts,
               const std::string& out_path) {
  std::ofstream jsonl;
  if (!out_path.empty()) {
    jsonl.open(out_path);
    if (!jsonl) {
      std::cerr << "cannot open output file: " << out_path << '\n';
      return 2;
    }
  }
  auto sink = [&](const dompack::TheoremReport& r) {
    if (jsonl.is_open()) jsonl << dompack::report_to_json(r) << '\n';
  };
  dompack::VerifySummary summary = dompack::verify_corpus(corpus, opts, sink, &std::cerr);
  if (jsonl.is_open()) {
    std::ofstream csv(out_path + ".summary.csv");
    if (!csv) {
      std::cerr << "cannot open output file: " << out_path << ".summary.csv\n";
      return 2;
    }
    csv << dompack::summary_to_csv(summary);
  }
  std::cout << dompack::summary_table(summary);
  return summary.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact domination/packing parameters on complement pairs"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "sweep a corpus and judge every bound");
  int n = 0;
  bool use_iso = false;
  bool use_labeled = false;
  std::string file;
  std::string out_path;
  dompack::VerifyOptions opts;
  verify_cmd->add_option("--n", n, "order for the built-in corpus");
  verify_cmd->add_flag("--iso", use_iso, "one graph per isomorphism class (default)");
  verify_cmd->add_flag("--labeled", use_labeled, "all labeled graphs");
  verify_cmd->add_option("--file", file, "graph6 file, one graph per line");
  verify_cmd->add_option("--k", opts.k_range, "k values (default 1,2,3)")->delimiter(',');
  verify_cmd->add_option("--j", opts.j_range, "j values (default 0,1)")->delimiter(',');
  verify_cmd->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path,
                         "write one JSON report per graph here, plus <out>.summary.csv");

  auto* params_cmd = app.add_subcommand("params", "all parameters of one graph and its complement");
  std::string params_g6;
  params_cmd->add_option("--g6", params_g6, "graph6 string")->required();

  auto* witness_cmd = app.add_subcommand("witness", "run a constructive proof on one graph");
  std::string witness_g6;
  std::string theorem;
  int wk = 1;
  int wj = 0;
  witness_cmd->add_option("--g6", witness_g6, "graph6 string")->required();
  witness_cmd->add_option("--theorem", theorem, "2.1 (min-degree route) or 2.2 (cut route)")
      ->required();
  witness_cmd->add_option("--k", wk, "k parameter");
  witness_cmd->add_option("--j", wj, "j parameter (2.1 only)");

  auto* hunt_cmd = app.add_subcommand("hunt", "random search for the hypothesis region");
  dompack::HuntOptions hunt_opts;
  std::string target;
  hunt_cmd->add_option("--n", hunt_opts.n, "graph order")->required();
  hunt_cmd->add_option("--trials", hunt_opts.trials, "number of random graphs")->required();
  hunt_cmd->add_option("--seed", hunt_opts.seed, "generator seed");
  hunt_cmd->add_option("--target", target, "2.1 or 2.2")->required();
  hunt_cmd->add_option("--k", hunt_opts.k, "k parameter");
  hunt_cmd->add_option("--j", hunt_opts.j, "j parameter (2.1 only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help or the parse error
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) {
      if (use_iso && use_labeled) {
        std::cerr << "--iso and --labeled are mutually exclusive\n";
        return 2;
      }
      dompack::CorpusSpec corpus;
      if (!file.empty()) {
        if (n != 0 || use_iso || use_labeled) {
          std::cerr << "--file cannot be combined with --n/--iso/--labeled\n";
          return 2;
        }
        corpus.kind = dompack::CorpusSpec::Kind::kFile;
        corpus.path = file;
      } else {
        if (n == 0) {
          std::cerr << "either --n or --file is required\n";
          return 2;
        }
        corpus.kind = use_labeled ? dompack::CorpusSpec::Kind::kLabeled
                                  : dompack::CorpusSpec::Kind::kIso;
        corpus.n = n;
      }
      return run_verify(corpus, opts, out_path);
    }

    if (params_cmd->parsed()) {
      std::cout << dompack::params_to_json(dompack::from_graph6(params_g6)) << '\n';
      return 0;
    }

    if (witness_cmd->parsed()) {
      if (theorem != "2.1" && theorem != "2.2") {
        std::cerr << "--theorem must be 2.1 or 2.2\n";
        return 2;
      }
      dompack::Graph g = dompack::from_graph6(witness_g6);
      dompack::WitnessRoute route = theorem == "2.1" ? dompack::WitnessRoute::kMinDegree
                                                     : dompack::WitnessRoute::kVertexCut;
      dompack::WitnessCertificate cert = route == dompack::WitnessRoute::kMinDegree
                                             ? dompack::min_degree_witness(g, wk, wj)
                                             : dompack::vertex_cut_witness(g, wk);
      std::cout << dompack::certificate_to_json(g, route, wk, wj, cert) << '\n';
      return 0;
    }

    if (hunt_cmd->parsed()) {
      if (target != "2.1" && target != "2.2") {
        std::cerr << "--target must be 2.1 or 2.2\n";
        return 2;
      }
      hunt_opts.route = target == "2.1" ? dompack::WitnessRoute::kMinDegree
                                        : dompack::WitnessRoute::kVertexCut;
      dompack::HuntResult result = dompack::hunt(hunt_opts);
      std::cout << dompack::hunt_to_json(hunt_opts, result) << '\n';
      if (!result.found)
        std::cerr << "note: hypothesis region not reached in " << hunt_opts.trials << " trials\n";
      return 0;
    }
  } catch (const dompack::HypothesisNotMet& e) {
    std::cerr << "hypothesis not met: " << e.what() << '\n';
    return 2;
  } catch (const dompack::ProofViolation& e) {
    std::cerr << "proof violation: " << e.what() << '\n';
    return 1;
  } catch (const dompack::Graph6Error& e) {
    std::cerr << "graph6: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
