// qcycle: hypercube even-cycle extremal toolkit.
//
// Subcommands: rep build|verify, cycles count|enumerate|check-bound,
// construct, lll-report, exact graph|cube, bounds, lift build|extract.
// JSON by default (wrapped in a run manifest), CSV for sweep tables.
// Exit codes: 0 ok, 1 verification failure, 2 invalid parameters,
// 3 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "qcycle/bounds.hpp"
#include "qcycle/cube.hpp"
#include "qcycle/cycles.hpp"
#include "qcycle/errors.hpp"
#include "qcycle/extremal.hpp"
#include "qcycle/hypergraph.hpp"
#include "qcycle/random_construct.hpp"
#include "qcycle/rational.hpp"
#include "qcycle/representation.hpp"
#include "qcycle/rng.hpp"

using json = nlohmann::ordered_json;
using namespace qcycle;

namespace {

constexpr const char* kVersion = "qcycle 0.1.0";

uint64_t fnv1a64(const std::string& data) {
  uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

std::string hex64(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

json vertex_json(const Vertex& v) { return json(v.elements()); }

json witness_json(const CycleWitness& w) {
  json arr = json::array();
  for (const Vertex& v : w.vertices) arr.push_back(vertex_json(v));
  return arr;
}

json representation_json(const Representation& rep) {
  json j;
  j["ell"] = rep.ell;
  j["n"] = rep.n;
  j["labels"] = {{"a", rep.labels.a},
                 {"b", rep.labels.b},
                 {"xs", rep.labels.xs},
                 {"ys", rep.labels.ys}};
  json a_seq = json::array();
  for (const Vertex& v : rep.a_seq) a_seq.push_back(vertex_json(v));
  json b_seq = json::array();
  for (const Vertex& v : rep.b_seq) b_seq.push_back(vertex_json(v));
  j["a_seq"] = a_seq;
  j["b_seq"] = b_seq;
  return j;
}

Representation representation_from_json(const json& in) {
  const json& j = in.contains("result") ? in.at("result") : in;
  Representation rep;
  rep.ell = j.at("ell").get<int>();
  GroundLabels labels;
  labels.a = j.at("labels").at("a").get<int>();
  labels.b = j.at("labels").at("b").get<int>();
  labels.xs = j.at("labels").at("xs").get<std::vector<int>>();
  labels.ys = j.at("labels").at("ys").get<std::vector<int>>();
  rep.labels = labels;
  int max_label = std::max(labels.a, labels.b);
  for (int x : labels.xs) max_label = std::max(max_label, x);
  for (int y : labels.ys) max_label = std::max(max_label, y);
  rep.n = j.contains("n") ? j.at("n").get<int>() : max_label;
  std::vector<std::array<int, 3>> hedges;
  for (const auto& arr : j.at("a_seq")) {
    const auto elems = arr.get<std::vector<int>>();
    rep.a_seq.push_back(Vertex::from_elements(rep.n, elems));
    if (elems.size() == 3) hedges.push_back({elems[0], elems[1], elems[2]});
  }
  for (const auto& arr : j.at("b_seq")) {
    rep.b_seq.push_back(
        Vertex::from_elements(rep.n, arr.get<std::vector<int>>()));
  }
  rep.hgraph = ThreeGraph(std::move(hedges));
  return rep;
}

json rational_json(const Rational& r) { return json(r.str()); }

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw invalid_parameter("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimpleGraph pattern_from_spec(const std::string& spec) {
  static const std::regex cycle_re("^[Cc]([0-9]+)$");
  std::smatch m;
  if (std::regex_match(spec, m, cycle_re)) {
    const int len = std::stoi(m[1]);
    if (len < 3) throw invalid_parameter("cycle pattern needs length >= 3");
    std::vector<std::array<int, 2>> edges;
    for (int i = 1; i <= len; ++i) edges.push_back({i, i % len + 1});
    return SimpleGraph(std::move(edges));
  }
  return parse_simple_graph_text(read_input(spec));
}

struct Output {
  std::string format = "json";  // json | csv
  std::string path;             // empty = stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw invalid_parameter("cannot open output file: " + path);
    out << text;
  }
};

// Wraps a result in the run manifest and emits it.
void emit_result(const Output& output, const std::string& subcommand,
                 const json& params, uint64_t seed, const json& result,
                 const std::string& started_at) {
  json envelope;
  json manifest;
  manifest["subcommand"] = subcommand;
  manifest["params"] = params;
  manifest["seed"] = seed;
  manifest["version"] = kVersion;
  manifest["started_at"] = started_at;
  manifest["finished_at"] = iso_timestamp();
  manifest["output_digest"] = "fnv1a:" + hex64(fnv1a64(result.dump()));
  envelope["manifest"] = manifest;
  envelope["result"] = result;
  output.emit(envelope.dump(2) + "\n");
}

uint64_t default_budget() {
  if (const char* env = std::getenv("QCYCLE_BUDGET")) {
    return std::strtoull(env, nullptr, 10);
  }
  return kDefaultBudget;
}

double counting_ratio(const CycleCensus& c) {
  long double denom = 1.0L;
  for (int i = 0; i < c.two_ell / 2; ++i) denom *= c.n;
  denom *= std::pow(2.0L, c.n);
  return static_cast<double>(c.total / denom);
}

json census_json(const CycleCensus& c) {
  json j;
  j["n"] = c.n;
  j["two_ell"] = c.two_ell;
  j["N"] = c.total;
  j["uniform"] = c.uniform();
  j["x"] = c.uniform() ? json(c.common_per_edge()) : json(nullptr);
  j["ratio_n_pow_l"] = counting_ratio(c);
  return j;
}

json construction_json(const ConstructionResult& r, bool emit_edges) {
  json j;
  j["params"] = {{"n", r.params.n},
                 {"ell", r.params.ell},
                 {"c", r.params.c},
                 {"a", rational_json(r.params.a)},
                 {"p", r.params.p},
                 {"num_colors", r.params.num_colors},
                 {"seed", r.params.seed}};
  j["color_selected"] = r.color_selected;
  j["edges_before_deletion"] = r.edges_before_deletion;
  j["deletions"] = r.deletions;
  j["mono_cycles_found"] = r.mono_cycles_found;
  j["kept_edge_count"] = r.kept_edges.edge_count();
  j["certified"] = r.certified;
  j["density_ratio"] = r.density_ratio;
  if (emit_edges) j["kept_edges"] = to_edge_list(r.kept_edges);
  return j;
}

json two_lift_witness_json(const TwoLiftWitness& w) {
  json j;
  j["a"] = w.a;
  j["b"] = w.b;
  json pairs = json::array();
  for (const auto& p : w.pair_set) pairs.push_back({p[0], p[1]});
  j["pairs"] = pairs;
  j["q"] = w.q();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercube even-cycle extremal toolkit"};
  app.require_subcommand(1);

  Output output;
  uint64_t budget = default_budget();
  app.add_option("--format", output.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output.path, "write output to a file");
  app.add_option("--budget", budget, "work-unit budget for enumeration");

  // ---- rep ----
  auto* rep = app.add_subcommand("rep", "cycle representations in layers 2-3");
  rep->require_subcommand(1);
  auto* rep_build = rep->add_subcommand("build", "build the representation");
  int rb_ell = 7;
  int rb_n = 0;
  int rb_a = 0, rb_b = 0;
  std::vector<int> rb_xs, rb_ys;
  rep_build->add_option("--ell", rb_ell, "odd cycle half-length, >= 7")
      ->required();
  rep_build->add_option("--n", rb_n, "ambient dimension (default ell)");
  rep_build->add_option("--label-a", rb_a, "ground element for a");
  rep_build->add_option("--label-b", rb_b, "ground element for b");
  rep_build->add_option("--xs", rb_xs, "ground elements x_1..x_{k-1}")
      ->delimiter(',');
  rep_build->add_option("--ys", rb_ys, "ground elements y_0..y_{k-1}")
      ->delimiter(',');

  auto* rep_verify =
      rep->add_subcommand("verify", "verify a representation JSON");
  std::string rv_input;
  rep_verify->add_option("--input", rv_input,
                         "representation JSON file (default stdin)");

  // ---- cycles ----
  auto* cycles = app.add_subcommand("cycles", "cycle counting and search");
  cycles->require_subcommand(1);
  auto* cyc_count = cycles->add_subcommand("count", "census over Q_n");
  int cc_n = 0, cc_two_ell = 0;
  cyc_count->add_option("--n", cc_n, "dimension")->required();
  cyc_count->add_option("--two-ell", cc_two_ell, "cycle length")->required();

  auto* cyc_enum = cycles->add_subcommand("enumerate", "list cycles");
  int ce_n = 0, ce_two_ell = 0;
  uint64_t ce_limit = 0;
  std::string ce_input;
  cyc_enum->add_option("--n", ce_n, "dimension (full Q_n)");
  cyc_enum->add_option("--input", ce_input, "edge-list file instead of Q_n");
  cyc_enum->add_option("--two-ell", ce_two_ell, "cycle length")->required();
  cyc_enum->add_option("--limit", ce_limit, "stop after this many");

  auto* cyc_bound = cycles->add_subcommand("check-bound", "ratio table");
  std::vector<int> cb_range;
  int cb_two_ell = 0;
  cyc_bound->add_option("--n-range", cb_range, "dimensions, comma separated")
      ->delimiter(',');
  cyc_bound->add_option("--two-ell", cb_two_ell, "cycle length")->required();

  // ---- construct ----
  auto* construct =
      app.add_subcommand("construct", "randomized cycle-free construction");
  int ct_n = 0, ct_ell = 0;
  double ct_c = 0.0;
  uint64_t ct_seed = 0, ct_trials = 0, ct_mono_trials = 0;
  std::vector<int> ct_n_list;
  std::vector<double> ct_c_list;
  bool ct_emit_edges = false;
  construct->add_option("--n", ct_n, "dimension");
  construct->add_option("--ell", ct_ell, "half cycle length, >= 2")
      ->required();
  construct->add_option("--c", ct_c, "density constant in p = c*n^(-a)");
  construct->add_option("--seed", ct_seed, "generator seed")->required();
  construct->add_option("--trials", ct_trials,
                        "repeat with derived per-trial seeds");
  construct->add_option("--mono-trials", ct_mono_trials,
                        "also sample monochromatic-cycle statistics");
  construct->add_option("--n-list", ct_n_list, "sweep dimensions")
      ->delimiter(',');
  construct->add_option("--c-list", ct_c_list, "sweep density constants")
      ->delimiter(',');
  construct->add_flag("--emit-edges", ct_emit_edges,
                      "include the kept edge list");

  // ---- lll-report ----
  auto* lll = app.add_subcommand("lll-report", "local-lemma condition report");
  int lr_n = 0, lr_ell = 0;
  double lr_c = 0.0;
  uint64_t lr_seed = 0;
  lll->add_option("--n", lr_n, "dimension")->required();
  lll->add_option("--ell", lr_ell, "half cycle length")->required();
  lll->add_option("--c", lr_c, "density constant")->required();
  lll->add_option("--seed", lr_seed, "seed recorded in the manifest");

  // ---- exact ----
  auto* exact = app.add_subcommand("exact", "exhaustive extremal oracles");
  exact->require_subcommand(1);
  auto* exact_graph = exact->add_subcommand("graph", "ex(n, pattern)");
  int eg_n = 0;
  std::string eg_pattern;
  bool eg_ignore_cap = false;
  exact_graph->add_option("--n", eg_n, "host K_n")->required();
  exact_graph
      ->add_option("--pattern", eg_pattern, "pattern file or C<k> shorthand")
      ->required();
  exact_graph->add_flag("--ignore-cap", eg_ignore_cap, "lift the size cap");

  auto* exact_cube = exact->add_subcommand("cube", "ex(Q_n, C_{2l})");
  int ec_n = 0, ec_two_ell = 0;
  bool ec_ignore_cap = false;
  exact_cube->add_option("--n", ec_n, "dimension")->required();
  exact_cube->add_option("--two-ell", ec_two_ell, "cycle length")->required();
  exact_cube->add_flag("--ignore-cap", ec_ignore_cap, "lift the size cap");

  // ---- bounds ----
  auto* bounds_cmd =
      app.add_subcommand("bounds", "exponent pipeline and literature table");
  int bd_ell = 0;
  bounds_cmd->add_option("--ell", bd_ell, "half cycle length")->required();

  // ---- lift ----
  auto* lift = app.add_subcommand("lift", "two-lift build and extraction");
  lift->require_subcommand(1);
  auto* lift_build = lift->add_subcommand("build", "two-lift of a 2-graph");
  std::string lb_input;
  lift_build->add_option("--input", lb_input, "2-graph file (default stdin)");
  auto* lift_extract =
      lift->add_subcommand("extract", "largest K_{2,q} / target extraction");
  std::string le_input, le_target;
  lift_extract->add_option("--input", le_input, "3-graph file (default stdin)");
  lift_extract->add_option("--target", le_target,
                           "bipartite target: file or C<k>");

  // Let --format/--output/--budget appear after the subcommand too.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; })) {
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/error
    return 2;
  }

  const std::string started_at = iso_timestamp();
  int exit_code = 0;

  try {
    if (rep_build->parsed()) {
      if (rb_n == 0) rb_n = rb_ell;
      std::optional<GroundLabels> labels;
      if (rb_a || rb_b || !rb_xs.empty() || !rb_ys.empty()) {
        labels = GroundLabels{rb_a, rb_b, rb_xs, rb_ys};
      }
      const Representation r = build_representation(rb_ell, rb_n, labels);
      json params{{"ell", rb_ell}, {"n", rb_n}};
      emit_result(output, "rep build", params, 0, representation_json(r),
                  started_at);
    } else if (rep_verify->parsed()) {
      const json in = json::parse(read_input(rv_input));
      const Representation r = representation_from_json(in);
      const VerifyReport report = check_representation(r);
      json clauses = json::array();
      for (const ClauseResult& c : report.clauses) {
        clauses.push_back({{"index", c.index},
                           {"name", c.name},
                           {"pass", c.pass},
                           {"detail", c.detail}});
      }
      json result{{"ell", r.ell},
                  {"n", r.n},
                  {"all_pass", report.all_pass},
                  {"first_failure", report.first_failure},
                  {"clauses", clauses}};
      emit_result(output, "rep verify", json{{"input", rv_input}}, 0, result,
                  started_at);
      if (!report.all_pass) exit_code = 1;
    } else if (cyc_count->parsed()) {
      const CycleCensus c = census(cc_n, cc_two_ell, budget);
      if (output.format == "csv") {
        std::ostringstream csv;
        csv << "n,two_ell,N,x,ratio\n";
        csv << c.n << "," << c.two_ell << "," << c.total << ","
            << c.common_per_edge() << "," << counting_ratio(c) << "\n";
        output.emit(csv.str());
      } else {
        json params{{"n", cc_n}, {"two_ell", cc_two_ell}, {"budget", budget}};
        emit_result(output, "cycles count", params, 0, census_json(c),
                    started_at);
      }
    } else if (cyc_enum->parsed()) {
      if ((ce_n == 0) == ce_input.empty()) {
        throw invalid_parameter("give exactly one of --n or --input");
      }
      const Subgraph g = ce_input.empty()
                             ? build_qn(ce_n)
                             : parse_edge_list_text(read_input(ce_input));
      const auto witnesses = enumerate_cycles(g, ce_two_ell, ce_limit, budget);
      json arr = json::array();
      json texts = json::array();
      for (const CycleWitness& w : witnesses) {
        arr.push_back(witness_json(w));
        texts.push_back(to_witness_text(w));
      }
      json result{{"two_ell", ce_two_ell},
                  {"count", witnesses.size()},
                  {"witnesses", arr},
                  {"witness_text", texts}};
      json params{{"n", ce_n},
                  {"input", ce_input},
                  {"two_ell", ce_two_ell},
                  {"limit", ce_limit},
                  {"budget", budget}};
      emit_result(output, "cycles enumerate", params, 0, result, started_at);
    } else if (cyc_bound->parsed()) {
      const auto rows = check_counting_bound(cb_range, cb_two_ell, budget);
      if (output.format == "csv") {
        std::ostringstream csv;
        csv << "n,two_ell,N,ratio\n";
        for (const auto& row : rows) {
          csv << row.n << "," << cb_two_ell << "," << row.total << ","
              << row.ratio << "\n";
        }
        output.emit(csv.str());
      } else {
        json arr = json::array();
        for (const auto& row : rows) {
          arr.push_back({{"n", row.n},
                         {"N", row.total},
                         {"denominator", row.denominator},
                         {"ratio", row.ratio}});
        }
        json params{{"n_range", cb_range},
                    {"two_ell", cb_two_ell},
                    {"budget", budget}};
        emit_result(output, "cycles check-bound", params, 0,
                    json{{"rows", arr}}, started_at);
      }
    } else if (construct->parsed()) {
      if (ct_n == 0 && ct_n_list.empty()) {
        throw invalid_parameter("give --n or --n-list");
      }
      if (ct_c == 0.0 && ct_c_list.empty()) {
        throw invalid_parameter("give --c or --c-list");
      }
      const std::vector<int> ns = ct_n_list.empty()
                                      ? std::vector<int>{ct_n}
                                      : ct_n_list;
      const std::vector<double> cs =
          ct_c_list.empty() ? std::vector<double>{ct_c} : ct_c_list;
      const uint64_t trials = std::max<uint64_t>(1, ct_trials);
      json runs = json::array();
      std::ostringstream csv;
      csv << "n,ell,c,seed,p,num_colors,edges_before_deletion,deletions,"
             "kept,certified,density_ratio\n";
      for (int n : ns) {
        for (double c : cs) {
          for (uint64_t t = 0; t < trials; ++t) {
            const uint64_t seed =
                ct_trials == 0 ? ct_seed : SplitMix64::derive_seed(ct_seed, t);
            const ConstructionResult r =
                run_construction(make_params(n, ct_ell, c, seed), budget);
            runs.push_back(construction_json(r, ct_emit_edges));
            csv << n << "," << ct_ell << "," << c << "," << seed << ","
                << r.params.p << "," << r.params.num_colors << ","
                << r.edges_before_deletion << "," << r.deletions << ","
                << r.kept_edges.edge_count() << "," << (r.certified ? 1 : 0)
                << "," << r.density_ratio << "\n";
          }
        }
      }
      if (output.format == "csv") {
        output.emit(csv.str());
      } else {
        json result;
        if (runs.size() == 1 && ct_mono_trials == 0) {
          result = runs.front();
        } else {
          result["runs"] = runs;
        }
        if (ct_mono_trials > 0) {
          const MonoCycleStats s = mono_cycle_stats(
              make_params(ns.front(), ct_ell, cs.front(), ct_seed),
              ct_mono_trials, budget);
          result["mono_stats"] = {{"trials", s.trials},
                                  {"observed_mean", s.observed_mean},
                                  {"sample_stddev", s.sample_stddev},
                                  {"expected_exact", s.expected_exact},
                                  {"expected_bound", s.expected_bound},
                                  {"cycle_count", s.cycle_count}};
        }
        json params{{"n_list", ns},     {"ell", ct_ell},
                    {"c_list", cs},     {"seed", ct_seed},
                    {"trials", trials}, {"mono_trials", ct_mono_trials},
                    {"budget", budget}};
        emit_result(output, "construct", params, ct_seed, result, started_at);
      }
    } else if (lll->parsed()) {
      const LLLReport r = lll_report(make_params(lr_n, lr_ell, lr_c, lr_seed),
                                     budget);
      json result{{"p_bound", r.p_bound},     {"x", r.x},
                  {"x_exact", r.x_exact},     {"d_bound", r.d_bound},
                  {"condition", r.condition}, {"satisfied", r.satisfied}};
      json params{{"n", lr_n}, {"ell", lr_ell}, {"c", lr_c},
                  {"budget", budget}};
      emit_result(output, "lll-report", params, lr_seed, result, started_at);
    } else if (exact_graph->parsed()) {
      const SimpleGraph pattern = pattern_from_spec(eg_pattern);
      const ExGraphResult r = ex_graph(eg_n, pattern, eg_ignore_cap);
      json result{{"host", "K_" + std::to_string(eg_n)},
                  {"pattern", to_simple_graph_text(pattern)},
                  {"value", r.value},
                  {"optimal_certified", r.optimal_certified},
                  {"nodes", r.nodes},
                  {"witness", to_simple_graph_text(r.witness)}};
      json params{{"n", eg_n}, {"pattern", eg_pattern}};
      emit_result(output, "exact graph", params, 0, result, started_at);
    } else if (exact_cube->parsed()) {
      const ExCubeResult r = ex_cube(ec_n, ec_two_ell, ec_ignore_cap);
      json result{{"host", "Q_" + std::to_string(ec_n)},
                  {"two_ell", ec_two_ell},
                  {"value", r.value},
                  {"optimal_certified", r.optimal_certified},
                  {"nodes", r.nodes},
                  {"witness", to_edge_list(r.witness)}};
      json params{{"n", ec_n}, {"two_ell", ec_two_ell}};
      emit_result(output, "exact cube", params, 0, result, started_at);
    } else if (bounds_cmd->parsed()) {
      json result;
      result["ell"] = bd_ell;
      if (bd_ell >= 7 && bd_ell % 2 == 1) {
        const ExponentChain chain = upper_exponent_chain(bd_ell);
        result["chain"] = {{"cycle_exp", rational_json(chain.cycle_exp)},
                           {"lift_exp", rational_json(chain.lift_exp)},
                           {"alpha_exp", rational_json(chain.alpha_exp)},
                           {"final_exp", rational_json(chain.final_exp)}};
        result["upper_exponent"] = rational_json(upper_exponent(bd_ell));
      }
      result["lower_exponent"] = rational_json(lower_exponent(bd_ell));
      json lit = json::array();
      for (const LiteratureRow& row : literature_exponents(bd_ell)) {
        json r{{"key", row.key}, {"description", row.description}};
        r["exponent"] =
            row.exponent ? rational_json(*row.exponent) : json(nullptr);
        if (!row.symbolic.empty()) r["symbolic"] = row.symbolic;
        lit.push_back(r);
      }
      result["literature"] = lit;
      emit_result(output, "bounds", json{{"ell", bd_ell}}, 0, result,
                  started_at);
    } else if (lift_build->parsed()) {
      const SimpleGraph h = parse_simple_graph_text(read_input(lb_input));
      const ThreeGraph lifted = two_lift(h);
      const auto [a, b] = two_lift_apexes(h);
      json result{{"a", a},
                  {"b", b},
                  {"edge_count", lifted.edge_count()},
                  {"three_graph", to_three_graph_text(lifted)}};
      emit_result(output, "lift build", json{{"input", lb_input}}, 0, result,
                  started_at);
    } else if (lift_extract->parsed()) {
      const ThreeGraph g = parse_three_graph_text(read_input(le_input));
      json result;
      if (le_target.empty()) {
        result = two_lift_witness_json(find_largest_k2q(g));
      } else {
        const ExtractionResult r =
            extract_two_lift(g, pattern_from_spec(le_target));
        result["success"] = r.success;
        result["witness"] = two_lift_witness_json(r.witness);
        result["stars"] = r.stars;
        result["q"] = r.q;
        result["oracle_threshold"] =
            r.oracle_threshold ? json(*r.oracle_threshold) : json(nullptr);
        result["message"] = r.message;
        json tmap = json::object();
        for (const auto& [from, to] : r.target_map) {
          tmap[std::to_string(from)] = to;
        }
        result["target_map"] = tmap;
      }
      json params{{"input", le_input}, {"target", le_target}};
      emit_result(output, "lift extract", params, 0, result, started_at);
    }
  } catch (const invalid_parameter& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const verification_failure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
