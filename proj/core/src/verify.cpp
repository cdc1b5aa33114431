#include "dompack/verify.hpp"

#include <array>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "dompack/enumerate.hpp"
#include "dompack/graph6.hpp"
#include "dompack/invariants.hpp"

namespace dompack {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kBlockSize = 256;

}  // namespace

std::string_view check_id_name(CheckId id) {
  switch (id) {
    case CheckId::kT21: return "T2.1";
    case CheckId::kT22: return "T2.2";
    case CheckId::kIneq1: return "Ineq1";
    case CheckId::kIneq2: return "Ineq2";
    case CheckId::kIneq4: return "Ineq4";
    case CheckId::kVolkmann: return "Volkmann";
    case CheckId::kPrince: return "Prince";
    case CheckId::kT31Sum: return "T3.1-sum";
    case CheckId::kT31Prod: return "T3.1-prod";
    case CheckId::kT32Sum: return "T3.2-sum";
    case CheckId::kT32Prod: return "T3.2-prod";
    case CheckId::kT33Sum: return "T3.3-sum";
    case CheckId::kT33Prod: return "T3.3-prod";
    case CheckId::kT34Sum: return "T3.4-sum";
    case CheckId::kT34Prod: return "T3.4-prod";
    case CheckId::kT35Sum: return "T3.5-sum";
    case CheckId::kT35Prod: return "T3.5-prod";
    case CheckId::kL2Bound: return "L2-bound";
  }
  return "?";
}

// ----- evaluation -----

namespace {

struct CheckKey {
  CheckId id;
  int k;
  int j;
};

std::vector<CheckKey> check_layout(const std::vector<int>& ks, const std::vector<int>& js) {
  std::vector<CheckKey> out;
  for (int k : ks)
    for (int j : js) out.push_back({CheckId::kT21, k, j});
  for (int k : ks) out.push_back({CheckId::kT22, k, -1});
  out.push_back({CheckId::kIneq1, -1, -1});
  out.push_back({CheckId::kIneq2, -1, -1});
  for (int k : ks) out.push_back({CheckId::kIneq4, k, -1});
  out.push_back({CheckId::kVolkmann, -1, -1});
  for (int k : ks) out.push_back({CheckId::kPrince, k, -1});
  for (CheckId id : {CheckId::kT31Sum, CheckId::kT31Prod, CheckId::kT32Sum, CheckId::kT32Prod,
                     CheckId::kT33Sum, CheckId::kT33Prod, CheckId::kT34Sum, CheckId::kT34Prod,
                     CheckId::kT35Sum, CheckId::kT35Prod, CheckId::kL2Bound})
    out.push_back({id, -1, -1});
  return out;
}

void validate_ranges(const std::vector<int>& ks, const std::vector<int>& js) {
  for (int k : ks)
    if (k < 1) throw std::invalid_argument("k values must be at least 1");
  for (int j : js)
    if (j < 0) throw std::invalid_argument("j values must be nonnegative");
}

// Memoizes the solver calls for one side of the complement pair.
struct SideCache {
  const Graph* g = nullptr;
  std::map<std::array<int, 3>, int> dom;
  std::map<std::pair<int, int>, int> pack;

  int dom_value(int a, int b, int c) {
    auto key = std::array<int, 3>{a, b, c};
    auto it = dom.find(key);
    if (it != dom.end()) return it->second;
    int v = generalized_domination_number(*g, a, b, c).value;
    dom.emplace(key, v);
    return v;
  }

  int pack_value(int k, bool closed) {
    auto key = std::make_pair(k, closed ? 1 : 0);
    auto it = pack.find(key);
    if (it != pack.end()) return it->second;
    int v = closed ? limited_packing_number(*g, k).value : total_limited_packing_number(*g, k).value;
    pack.emplace(key, v);
    return v;
  }
};

struct EvalContext {
  const Graph* g;
  const Graph* gc;
  SideCache side_g;
  SideCache side_c;
  int n;
  int delta, delta_c;
  int big_delta, big_delta_c;
  int kappa, kappa_c;
  Diameter diam = Diameter::finite(0);
  Diameter diam_c = Diameter::finite(0);
  int gamma, gamma_c;
};

bool pi_plus_one_isolated(const Graph& h) {
  std::vector<VertexSet> comps = h.components();
  if (comps.size() != 2) return false;
  int single = comps[0].size() == 1 ? 0 : comps[1].size() == 1 ? 1 : -1;
  if (single < 0) return false;
  VertexSet hub = comps[single == 0 ? 1 : 0];
  if (hub.size() < 2) return false;
  return is_universal_pendant_graph(h.induced_subgraph(hub));
}

bool run_witness(const Graph& g, WitnessRoute route, int k, int j) {
  try {
    if (route == WitnessRoute::kMinDegree)
      min_degree_witness(g, k, j);
    else
      vertex_cut_witness(g, k);
    return true;
  } catch (const ProofViolation&) {
    return false;
  } catch (const HypothesisNotMet&) {
    return false;  // should be unreachable; count it as a failure, not a crash
  }
}

TheoremCheck make_check(EvalContext& ctx, const CheckKey& key) {
  TheoremCheck c;
  c.id = key.id;
  c.k = key.k;
  c.j = key.j;
  const int n = ctx.n;

  auto judge = [&c]() {
    c.holds = !c.hypothesis_met || c.lhs <= c.rhs;
    c.equality = c.hypothesis_met && c.lhs == c.rhs;
  };

  switch (key.id) {
    case CheckId::kT21: {
      int k = key.k, j = key.j;
      bool gamma_hyp = ctx.gamma >= k + j + 2 && ctx.gamma_c >= k + j + 2;
      int p = ctx.side_g.dom_value(k - 1, k, j);
      int pc = ctx.side_c.dom_value(k - 1, k, j);
      c.rhs = ctx.delta + ctx.delta_c - (ctx.gamma + ctx.gamma_c) + 2 * k + 4;
      if (p >= 0 && pc >= 0) c.lhs = p + pc;
      c.hypothesis_met = gamma_hyp && p >= 0 && pc >= 0;
      if (gamma_hyp)
        c.witness_ok = run_witness(*ctx.g, WitnessRoute::kMinDegree, k, j) &&
                       run_witness(*ctx.gc, WitnessRoute::kMinDegree, k, j);
      judge();
      break;
    }
    case CheckId::kT22: {
      int k = key.k;
      bool gamma_hyp = ctx.gamma >= k + 2 && ctx.gamma_c >= k + 2;
      int p = ctx.side_g.dom_value(0, k, 0);
      int pc = ctx.side_c.dom_value(0, k, 0);
      c.rhs = ctx.kappa + ctx.kappa_c - (ctx.gamma + ctx.gamma_c) + 2 * k + 4;
      c.lhs = p + pc;
      c.hypothesis_met = gamma_hyp;
      if (gamma_hyp)
        c.witness_ok = run_witness(*ctx.g, WitnessRoute::kVertexCut, k, 0) &&
                       run_witness(*ctx.gc, WitnessRoute::kVertexCut, k, 0);
      judge();
      break;
    }
    case CheckId::kIneq1:
    case CheckId::kIneq2: {
      int threshold = key.id == CheckId::kIneq1 ? 5 : 4;
      int p = ctx.side_g.dom_value(1, 2, 0);
      int pc = ctx.side_c.dom_value(1, 2, 0);
      c.rhs = ctx.delta + ctx.delta_c;
      if (p >= 0 && pc >= 0) c.lhs = p + pc;
      c.hypothesis_met =
          ctx.gamma >= threshold && ctx.gamma_c >= threshold && p >= 0 && pc >= 0;
      judge();
      break;
    }
    case CheckId::kIneq4: {
      int k = key.k;
      int p = ctx.side_g.dom_value(k - 1, k, 0);
      int pc = ctx.side_c.dom_value(k - 1, k, 0);
      c.rhs = ctx.delta + ctx.delta_c;
      if (p >= 0 && pc >= 0) c.lhs = p + pc;
      c.hypothesis_met = ctx.gamma >= k + 2 && ctx.gamma_c >= k + 2 && p >= 0 && pc >= 0;
      judge();
      break;
    }
    case CheckId::kVolkmann: {
      c.lhs = ctx.side_g.dom_value(0, 2, 0) + ctx.side_c.dom_value(0, 2, 0);
      c.rhs = n + 2;
      c.hypothesis_met = true;
      judge();
      break;
    }
    case CheckId::kPrince: {
      int k = key.k;
      c.lhs = ctx.side_g.dom_value(0, k, 0) + ctx.side_c.dom_value(0, k, 0);
      c.rhs = n + 2 * k - 1;
      c.hypothesis_met = true;
      judge();
      break;
    }
    case CheckId::kT31Sum:
    case CheckId::kT31Prod: {
      bool sum = key.id == CheckId::kT31Sum;
      c.hypothesis_met = ctx.big_delta >= 1 && ctx.big_delta_c >= 1;
      long long rho_g = ctx.side_g.pack_value(1, true);
      long long rho_c = ctx.side_c.pack_value(1, true);
      c.lhs = sum ? rho_g + rho_c : rho_g * rho_c;
      if (ctx.gamma_c == 1)
        c.rhs = sum ? n - ctx.big_delta + 1 : n - ctx.big_delta;
      else if (ctx.gamma_c == 2)
        c.rhs = sum ? n - ctx.big_delta + 2 : 2 * (n - ctx.big_delta);
      else
        c.rhs = sum ? ctx.delta + 2 : ctx.delta + 1;
      judge();
      if (c.hypothesis_met) {
        bool recog;
        if (ctx.gamma_c == 1)
          recog = packing_extremal_structure(*ctx.g).member;
        else if (ctx.gamma_c == 2)
          recog = packing_extremal_structure(*ctx.g).member && ctx.diam_c.at_least(3);
        else
          recog = packing_extremal_structure(*ctx.gc).member;
        c.recognizer_agrees = (c.equality == recog);
      }
      break;
    }
    case CheckId::kT32Sum:
    case CheckId::kT32Prod: {
      bool sum = key.id == CheckId::kT32Sum;
      c.hypothesis_met = ctx.gamma_c >= 3;
      long long ro_g = ctx.side_g.pack_value(1, false);
      long long ro_c = ctx.side_c.pack_value(1, false);
      c.lhs = sum ? ro_g + ro_c : ro_g * ro_c;
      c.rhs = sum ? ctx.delta + 3 : ctx.delta + 2;
      judge();
      if (c.hypothesis_met) {
        FamilyVerdict verdict = open_packing_extremal_structure(*ctx.gc);
        c.recognizer_agrees = (c.equality == verdict.member);
        if (verdict.member)
          c.consequence_ok = verdict.decomposition->k2_count + verdict.decomposition->k1_count >= 1;
      }
      break;
    }
    case CheckId::kT33Sum:
    case CheckId::kT33Prod: {
      bool sum = key.id == CheckId::kT33Sum;
      c.hypothesis_met = n >= 3;
      long long ro_g = ctx.side_g.pack_value(1, false);
      long long ro_c = ctx.side_c.pack_value(1, false);
      c.lhs = sum ? ro_g + ro_c : ro_g * ro_c;
      c.rhs = sum ? n - ctx.big_delta + ctx.delta + 3
                  : static_cast<long long>(n - ctx.big_delta + 1) * (ctx.delta + 2);
      judge();
      if (c.hypothesis_met) {
        bool recog = (is_universal_pendant_graph(*ctx.g) && pi_plus_one_isolated(*ctx.gc)) ||
                     (is_universal_pendant_graph(*ctx.gc) && pi_plus_one_isolated(*ctx.g));
        c.recognizer_agrees = (c.equality == recog);
      }
      break;
    }
    case CheckId::kT34Sum:
    case CheckId::kT34Prod: {
      bool sum = key.id == CheckId::kT34Sum;
      int gt = ctx.side_g.dom_value(1, 1, 0);
      int gtc = ctx.side_c.dom_value(1, 1, 0);
      c.hypothesis_met = ctx.delta >= 1 && ctx.delta_c >= 1 && gt >= 0 && gtc >= 0;
      if (gt >= 0 && gtc >= 0)
        c.lhs = sum ? gt + gtc : static_cast<long long>(gt) * gtc;
      c.rhs = sum ? n + 2 : 2 * n;
      judge();
      if (c.hypothesis_met) {
        bool recog = (ctx.big_delta == 1 && ctx.delta == 1) ||
                     (ctx.big_delta_c == 1 && ctx.delta_c == 1);
        c.recognizer_agrees = (c.equality == recog);
      }
      break;
    }
    case CheckId::kT35Sum:
    case CheckId::kT35Prod: {
      bool sum = key.id == CheckId::kT35Sum;
      long long ro_g = ctx.side_g.pack_value(1, false);
      long long ro_c = ctx.side_c.pack_value(1, false);
      c.lhs = sum ? ro_g + ro_c : ro_g * ro_c;
      c.rhs = sum ? n + 2 : 2 * n;
      c.hypothesis_met = true;
      judge();
      c.recognizer_agrees = (c.equality == is_open_packing_sum_extremal_pair(*ctx.g));
      break;
    }
    case CheckId::kL2Bound: {
      c.lhs = ctx.side_g.pack_value(2, true) + ctx.side_c.pack_value(2, true);
      c.rhs = n + 2;
      c.hypothesis_met = true;
      judge();
      break;
    }
  }
  return c;
}

void push_params(std::vector<ParamEntry>& out, SideCache& side, const std::vector<int>& ks,
                 const std::vector<int>& js) {
  out.push_back({"gamma", side.dom_value(0, 1, 0)});
  out.push_back({"gamma_t", side.dom_value(1, 1, 0)});
  for (int k : ks) out.push_back({"gamma_k" + std::to_string(k), side.dom_value(0, k, 0)});
  out.push_back({"dd", side.dom_value(1, 2, 0)});
  for (int k : ks) out.push_back({"gamma_x" + std::to_string(k), side.dom_value(k - 1, k, 0)});
  out.push_back({"gamma_r", side.dom_value(0, 1, 1)});
  out.push_back({"gamma_2r", side.dom_value(1, 2, 1)});
  out.push_back({"rho", side.pack_value(1, true)});
  out.push_back({"rho_o", side.pack_value(1, false)});
  for (int k : ks) out.push_back({"L" + std::to_string(k), side.pack_value(k, true)});
  for (int k : ks) out.push_back({"L" + std::to_string(k) + "t", side.pack_value(k, false)});
  for (int k : ks)
    for (int j : js)
      out.push_back({"gamma(" + std::to_string(k - 1) + "," + std::to_string(k) + "," +
                         std::to_string(j) + ")",
                     side.dom_value(k - 1, k, j)});
}

std::string graph_label(const Graph& g) {
  if (g.order() <= 62) return to_graph6(g);
  std::ostringstream os;
  os << "order-" << g.order() << "-0x" << std::hex << g.hash();
  return os.str();
}

}  // namespace

TheoremReport evaluate_graph(const Graph& g, const std::vector<int>& k_range,
                             const std::vector<int>& j_range) {
  validate_ranges(k_range, j_range);
  Graph gc = g.complement();

  EvalContext ctx{};
  ctx.g = &g;
  ctx.gc = &gc;
  ctx.side_g.g = &g;
  ctx.side_c.g = &gc;
  ctx.n = g.order();
  ctx.delta = g.min_degree();
  ctx.delta_c = gc.min_degree();
  ctx.big_delta = g.max_degree();
  ctx.big_delta_c = gc.max_degree();
  ctx.kappa = g.vertex_connectivity();
  ctx.kappa_c = gc.vertex_connectivity();
  ctx.diam = g.diameter();
  ctx.diam_c = gc.diameter();
  ctx.gamma = ctx.side_g.dom_value(0, 1, 0);
  ctx.gamma_c = ctx.side_c.dom_value(0, 1, 0);

  TheoremReport report;
  report.graph6 = graph_label(g);
  report.n = ctx.n;
  report.min_degree = ctx.delta;
  report.max_degree = ctx.big_delta;
  report.connectivity = ctx.kappa;
  report.connectivity_bar = ctx.kappa_c;
  report.diam = ctx.diam;
  report.diam_bar = ctx.diam_c;

  for (const CheckKey& key : check_layout(k_range, j_range))
    report.checks.push_back(make_check(ctx, key));

  push_params(report.params_g, ctx.side_g, k_range, j_range);
  push_params(report.params_bar, ctx.side_c, k_range, j_range);
  return report;
}

// ----- summary -----

long long VerifySummary::total_violations() const {
  long long t = 0;
  for (const CheckAggregate& a : per_check)
    t += a.violations + a.recognizer_mismatches + a.witness_failures + a.consequence_failures;
  return t;
}

bool VerifySummary::clean() const { return total_violations() == 0; }

namespace {

struct Aggregator {
  VerifySummary summary;

  explicit Aggregator(const VerifyOptions& opts) {
    for (const CheckKey& key : check_layout(opts.k_range, opts.j_range))
      summary.per_check.push_back({key.id, key.k, key.j, 0, 0, 0, 0, 0, 0});
  }

  void add(const TheoremReport& report) {
    ++summary.graphs_checked;
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const TheoremCheck& c = report.checks[i];
      CheckAggregate& a = summary.per_check[i];
      if (c.hypothesis_met) {
        ++a.hypothesis_hits;
        if (!c.holds) ++a.violations;
        if (c.equality) ++a.equalities;
      }
      if (c.recognizer_agrees && !*c.recognizer_agrees) ++a.recognizer_mismatches;
      if (c.witness_ok && !*c.witness_ok) ++a.witness_failures;
      if (c.consequence_ok && !*c.consequence_ok) ++a.consequence_failures;
    }
  }
};

}  // namespace

VerifySummary verify_corpus(const CorpusSpec& corpus, const VerifyOptions& opts,
                            const std::function<void(const TheoremReport&)>& sink,
                            std::ostream* diagnostics) {
  validate_ranges(opts.k_range, opts.j_range);
  if (opts.jobs < 1) throw std::invalid_argument("worker count must be at least 1");

  Aggregator agg(opts);
  std::vector<Graph> block;
  block.reserve(kBlockSize);

  auto process_block = [&]() {
    if (block.empty()) return;
    std::vector<TheoremReport> results(block.size());
    int jobs = std::min<int>(opts.jobs, static_cast<int>(block.size()));
    if (jobs <= 1) {
      for (std::size_t i = 0; i < block.size(); ++i)
        results[i] = evaluate_graph(block[i], opts.k_range, opts.j_range);
    } else {
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
      for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t]() {
          try {
            for (std::size_t i = static_cast<std::size_t>(t); i < block.size();
                 i += static_cast<std::size_t>(jobs))
              results[i] = evaluate_graph(block[i], opts.k_range, opts.j_range);
          } catch (...) {
            errors[static_cast<std::size_t>(t)] = std::current_exception();
          }
        });
      }
      for (std::thread& w : workers) w.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (const TheoremReport& r : results) {
      if (sink) sink(r);
      agg.add(r);
    }
    block.clear();
  };

  auto feed = [&](const Graph& g) {
    block.push_back(g);
    if (block.size() >= kBlockSize) process_block();
  };

  switch (corpus.kind) {
    case CorpusSpec::Kind::kIso:
      enumerate_graphs(corpus.n, true, feed);
      break;
    case CorpusSpec::Kind::kLabeled:
      enumerate_graphs(corpus.n, false, feed);
      break;
    case CorpusSpec::Kind::kFile: {
      std::ifstream in(corpus.path);
      if (!in) throw std::runtime_error("cannot open corpus file: " + corpus.path);
      std::string line;
      long long lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        try {
          feed(from_graph6(line));
        } catch (const Graph6Error& e) {
          ++agg.summary.malformed_lines;
          if (diagnostics) *diagnostics << "line " << lineno << ": " << e.what() << '\n';
        }
      }
      break;
    }
  }
  process_block();
  return agg.summary;
}

// ----- randomized hunt -----

Graph random_graph(int n, std::mt19937_64& rng) {
  if (n < 1 || n > Graph::kMaxOrder) throw std::invalid_argument("order must be in [1,64]");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  std::uint64_t pool = 0;
  int avail = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        pool = rng();
        avail = 64;
      }
      if (pool & 1u) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
      pool >>= 1;
      --avail;
    }
  return Graph::from_rows(n, std::move(rows));
}

HuntResult hunt(const HuntOptions& options) {
  if (options.n < 1 || options.n > 24)
    throw std::invalid_argument("hunt supports order in [1,24]");
  if (options.trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  if (options.k < 1) throw std::invalid_argument("k must be at least 1");
  if (options.j < 0) throw std::invalid_argument("j must be nonnegative");

  int threshold =
      options.route == WitnessRoute::kMinDegree ? options.k + options.j + 2 : options.k + 2;
  std::mt19937_64 rng(options.seed);
  HuntResult result;
  for (long long t = 1; t <= options.trials; ++t) {
    Graph g = random_graph(options.n, rng);
    if (!domination_number_at_least(g, threshold)) continue;
    if (!domination_number_at_least(g.complement(), threshold)) continue;
    result.found = true;
    result.trials_used = t;
    result.graph6 = to_graph6(g);
    result.certificate = options.route == WitnessRoute::kMinDegree
                             ? min_degree_witness(g, options.k, options.j)
                             : vertex_cut_witness(g, options.k);
    return result;
  }
  result.trials_used = options.trials;
  return result;
}

// ----- serialization -----

namespace {

ojson diameter_json(const Diameter& d) {
  if (d.is_infinite()) return nullptr;
  return d.value();
}

ojson param_value_json(int v) {
  if (v < 0) return "infeasible";
  return v;
}

ojson params_json(const std::vector<ParamEntry>& entries) {
  ojson o = ojson::object();
  for (const ParamEntry& e : entries) o[e.name] = param_value_json(e.value);
  return o;
}

ojson check_json(const TheoremCheck& c) {
  ojson o = ojson::object();
  o["id"] = std::string(check_id_name(c.id));
  if (c.k >= 0) o["k"] = c.k;
  if (c.j >= 0) o["j"] = c.j;
  o["hypothesis_met"] = c.hypothesis_met;
  o["lhs"] = c.lhs;
  o["rhs"] = c.rhs;
  o["holds"] = c.holds;
  o["equality"] = c.equality;
  if (c.recognizer_agrees) o["recognizer_agrees"] = *c.recognizer_agrees;
  if (c.witness_ok) o["witness_ok"] = *c.witness_ok;
  if (c.consequence_ok) o["consequence_ok"] = *c.consequence_ok;
  return o;
}

ojson vertex_list_json(VertexSet s) {
  ojson a = ojson::array();
  for (int v : s.vertices()) a.push_back(v);
  return a;
}

}  // namespace

std::string report_to_json(const TheoremReport& report) {
  ojson o = ojson::object();
  o["schema"] = "dompack.report.v1";
  o["graph6"] = report.graph6;
  o["n"] = report.n;
  o["min_degree"] = report.min_degree;
  o["max_degree"] = report.max_degree;
  o["connectivity"] = report.connectivity;
  o["connectivity_bar"] = report.connectivity_bar;
  o["diameter"] = diameter_json(report.diam);
  o["diameter_bar"] = diameter_json(report.diam_bar);
  o["params"] = params_json(report.params_g);
  o["complement_params"] = params_json(report.params_bar);
  ojson checks = ojson::array();
  for (const TheoremCheck& c : report.checks) checks.push_back(check_json(c));
  o["checks"] = checks;
  return o.dump();
}

std::string params_to_json(const Graph& g) {
  TheoremReport report = evaluate_graph(g, {1, 2, 3}, {0, 1});
  ojson o = ojson::object();
  o["schema"] = "dompack.params.v1";
  o["graph6"] = report.graph6;
  o["n"] = report.n;
  o["min_degree"] = report.min_degree;
  o["max_degree"] = report.max_degree;
  o["connectivity"] = report.connectivity;
  o["connectivity_bar"] = report.connectivity_bar;
  o["diameter"] = diameter_json(report.diam);
  o["diameter_bar"] = diameter_json(report.diam_bar);
  o["params"] = params_json(report.params_g);
  o["complement_params"] = params_json(report.params_bar);
  return o.dump();
}

std::string certificate_to_json(const Graph& g, WitnessRoute route, int k, int j,
                                const WitnessCertificate& cert) {
  ojson o = ojson::object();
  o["schema"] = "dompack.witness.v1";
  o["graph6"] = graph_label(g);
  o["theorem"] = route == WitnessRoute::kMinDegree ? "2.1" : "2.2";
  o["k"] = k;
  if (route == WitnessRoute::kMinDegree) o["j"] = j;
  o["u"] = cert.u;
  if (route == WitnessRoute::kMinDegree)
    o["v0"] = cert.v0;
  else
    o["v"] = cert.v0;
  if (cert.cut) o["cut"] = vertex_list_json(*cert.cut);
  o["clique"] = vertex_list_json(cert.clique);
  ojson anchors = ojson::array();
  for (int a : cert.anchors) anchors.push_back(a);
  o["anchors"] = anchors;
  o["result_set"] = vertex_list_json(cert.result_set);
  o["result_size"] = cert.result_set.size();
  o["claimed_bound"] = cert.claimed_bound;
  o["valid"] = true;
  return o.dump();
}

std::string hunt_to_json(const HuntOptions& options, const HuntResult& result) {
  ojson o = ojson::object();
  o["schema"] = "dompack.hunt.v1";
  o["target"] = options.route == WitnessRoute::kMinDegree ? "2.1" : "2.2";
  o["n"] = options.n;
  o["k"] = options.k;
  if (options.route == WitnessRoute::kMinDegree) o["j"] = options.j;
  o["seed"] = options.seed;
  o["trials"] = options.trials;
  o["found"] = result.found;
  o["trials_used"] = result.trials_used;
  if (result.found) {
    o["graph6"] = result.graph6;
    o["certificate"] = ojson::parse(certificate_to_json(
        from_graph6(result.graph6), options.route, options.k, options.j, *result.certificate));
  } else {
    o["result"] = "none";
  }
  return o.dump();
}

std::string summary_to_csv(const VerifySummary& summary) {
  std::ostringstream os;
  os << "schema,check,k,j,graphs,hypothesis_hits,violations,equalities,"
        "recognizer_mismatches,witness_failures,consequence_failures,malformed_lines\n";
  os << "dompack.summary.v1,_corpus,,," << summary.graphs_checked << ",,,,,,,"
     << summary.malformed_lines << "\n";
  for (const CheckAggregate& a : summary.per_check) {
    os << "dompack.summary.v1," << check_id_name(a.id) << ",";
    if (a.k >= 0) os << a.k;
    os << ",";
    if (a.j >= 0) os << a.j;
    os << "," << summary.graphs_checked << "," << a.hypothesis_hits << "," << a.violations << ","
       << a.equalities << "," << a.recognizer_mismatches << "," << a.witness_failures << ","
       << a.consequence_failures << ",\n";
  }
  return os.str();
}

std::string summary_table(const VerifySummary& summary) {
  std::ostringstream os;
  os << "graphs checked: " << summary.graphs_checked << "\n";
  os << "malformed lines: " << summary.malformed_lines << "\n\n";
  os << std::left << std::setw(11) << "check" << std::right << std::setw(3) << "k" << std::setw(3)
     << "j" << std::setw(10) << "hyp_hits" << std::setw(11) << "violations" << std::setw(11)
     << "equalities" << std::setw(10) << "recog_bad" << std::setw(12) << "witness_bad"
     << std::setw(10) << "conseq_bad" << "\n";
  for (const CheckAggregate& a : summary.per_check) {
    os << std::left << std::setw(11) << check_id_name(a.id) << std::right << std::setw(3);
    if (a.k >= 0)
      os << a.k;
    else
      os << "-";
    os << std::setw(3);
    if (a.j >= 0)
      os << a.j;
    else
      os << "-";
    os << std::setw(10) << a.hypothesis_hits << std::setw(11) << a.violations << std::setw(11)
       << a.equalities << std::setw(10) << a.recognizer_mismatches << std::setw(12)
       << a.witness_failures << std::setw(10) << a.consequence_failures << "\n";
  }
  os << "\n";
  if (summary.clean())
    os << "no counterexamples, no mismatches\n";
  else
    os << "VIOLATIONS FOUND: " << summary.total_violations() << "\n";
  return os.str();
}

}  // namespace dompack
