#pragma once

// Complement-pair bound verification.  evaluate_graph computes every
// parameter on a graph and its complement and judges each implemented
// bound: hypothesis, left/right sides, equality, and (where a structural
// characterization of equality exists) whether the recognizer agrees.
// verify_corpus sweeps a corpus and aggregates; hunt searches random
// graphs for the constructive theorems' hypothesis region.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dompack/constructions.hpp"
#include "dompack/graph.hpp"
#include "dompack/invariants.hpp"

namespace dompack {

enum class CheckId {
  kT21,
  kT22,
  kIneq1,
  kIneq2,
  kIneq4,
  kVolkmann,
  kPrince,
  kT31Sum,
  kT31Prod,
  kT32Sum,
  kT32Prod,
  kT33Sum,
  kT33Prod,
  kT34Sum,
  kT34Prod,
  kT35Sum,
  kT35Prod,
  kL2Bound,
};

std::string_view check_id_name(CheckId id);

struct TheoremCheck {
  CheckId id = CheckId::kT21;
  int k = -1;  // -1 when the check takes no such parameter
  int j = -1;
  bool hypothesis_met = false;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = true;  // vacuously true when the hypothesis fails
  bool equality = false;
  std::optional<bool> recognizer_agrees;  // equality characterizations only
  std::optional<bool> witness_ok;         // constructive checks only
  std::optional<bool> consequence_ok;     // side conditions (r+s >= 1)
};

struct ParamEntry {
  std::string name;
  int value = ParamResult::kInfeasible;
};

struct TheoremReport {
  std::string graph6;
  int n = 0;
  int min_degree = 0;
  int max_degree = 0;
  int connectivity = 0;
  int connectivity_bar = 0;
  Diameter diam = Diameter::finite(0);
  Diameter diam_bar = Diameter::finite(0);
  std::vector<ParamEntry> params_g;
  std::vector<ParamEntry> params_bar;
  std::vector<TheoremCheck> checks;
};

TheoremReport evaluate_graph(const Graph& g, const std::vector<int>& k_range,
                             const std::vector<int>& j_range);

struct CorpusSpec {
  enum class Kind { kIso, kLabeled, kFile };
  Kind kind = Kind::kIso;
  int n = 0;          // built-in enumeration only
  std::string path;   // graph6 file only
};

struct VerifyOptions {
  std::vector<int> k_range{1, 2, 3};
  std::vector<int> j_range{0, 1};
  int jobs = 1;
};

struct CheckAggregate {
  CheckId id = CheckId::kT21;
  int k = -1;
  int j = -1;
  long long hypothesis_hits = 0;
  long long violations = 0;
  long long equalities = 0;
  long long recognizer_mismatches = 0;
  long long witness_failures = 0;
  long long consequence_failures = 0;
};

struct VerifySummary {
  long long graphs_checked = 0;
  long long malformed_lines = 0;
  std::vector<CheckAggregate> per_check;

  long long total_violations() const;
  // no violated bound, no recognizer disagreement, no failed construction
  bool clean() const;
};

// Streams one report per corpus graph to `sink` (in corpus order regardless
// of the worker count) and aggregates.  Malformed graph6 lines are counted,
// reported to `diagnostics` with their line number, and skipped.
VerifySummary verify_corpus(const CorpusSpec& corpus, const VerifyOptions& opts,
                            const std::function<void(const TheoremReport&)>& sink,
                            std::ostream* diagnostics = nullptr);

// ----- randomized hypothesis hunt -----

enum class WitnessRoute { kMinDegree, kVertexCut };

struct HuntOptions {
  int n = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  WitnessRoute route = WitnessRoute::kMinDegree;
  int k = 1;
  int j = 0;  // min-degree route only
};

struct HuntResult {
  bool found = false;
  long long trials_used = 0;
  std::string graph6;
  std::optional<WitnessCertificate> certificate;
};

// Edge-probability-1/2 random graph; bits are drawn from the generator in
// the same column order graph6 uses, so results are reproducible.
Graph random_graph(int n, std::mt19937_64& rng);

HuntResult hunt(const HuntOptions& options);

// ----- serialization -----

std::string report_to_json(const TheoremReport& report);
std::string params_to_json(const Graph& g);
std::string certificate_to_json(const Graph& g, WitnessRoute route, int k, int j,
                                const WitnessCertificate& cert);
std::string hunt_to_json(const HuntOptions& options, const HuntResult& result);
std::string summary_to_csv(const VerifySummary& summary);
std::string summary_table(const VerifySummary& summary);

}  // namespace dompack
