#include "cliquemin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquemin/campaign.hpp"
#include "cliquemin/cliques.hpp"
#include "cliquemin/errors.hpp"
#include "cliquemin/extremal.hpp"
#include "cliquemin/formulas.hpp"
#include "cliquemin/graph_io.hpp"
#include "cliquemin/oracle.hpp"
#include "cliquemin/verifier.hpp"

namespace cliquemin {

namespace {

using nlohmann::json;

struct Output {
  json result = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string text;
  int status = kExitOk;
};

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.n) j["n"] = *c.n;
  if (c.beta) j["beta"] = *c.beta;
  if (c.r) j["r"] = *c.r;
  if (c.delta) j["delta"] = *c.delta;
  if (c.p) j["p"] = *c.p;
  if (!c.pairs.empty()) {
    j["pairs"] = json::array();
    for (auto [t, s] : c.pairs) j["pairs"].push_back({t, s});
  }
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["threshold"] = c.threshold;
  j["inner_threshold"] = c.inner_threshold;
  j["suite"] = c.suite;
  j["mode"] = c.mode;
  if (!c.graph.empty()) j["graph"] = c.graph;
  j["construct"] = c.construct;
  j["resolution"] = c.resolution;
  j["format"] = c.format;
  return j;
}

std::string config_line(const RunConfig& c) {
  const json j = config_json(c);
  std::string line;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!line.empty()) line += ' ';
    line += it.key() + '=' + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return line;
}

long need_n(const RunConfig& c) {
  if (!c.n) throw InputError(c.command + " needs --n");
  if (*c.n < 1) throw InputError("--n must be positive");
  return *c.n;
}

Beta need_beta(const RunConfig& c) {
  if (!c.beta) throw InputError(c.command + " needs --beta p/q");
  return Beta::parse(*c.beta);
}

int need_r(const RunConfig& c) {
  if (!c.r) throw InputError(c.command + " needs --r");
  return *c.r;
}

DegreeMode degree_mode(const RunConfig& c) {
  if (c.mode == "exactly") return DegreeMode::MinDegreeExactly;
  if (c.mode == "at-least") return DegreeMode::MinDegreeAtLeast;
  throw InputError("--mode must be exactly or at-least, got " + c.mode);
}

// Graph from --graph, or the constructed member for --n/--beta.
Graph input_graph(const RunConfig& c, std::string& source) {
  if (!c.graph.empty() && c.construct) throw InputError("give either --graph or --construct, not both");
  if (!c.graph.empty()) {
    source = c.graph;
    return load_graph_file(c.graph).graph;
  }
  if (c.construct) {
    source = "construction";
    return build_extremal(need_n(c), need_beta(c), c.inner_threshold);
  }
  throw InputError(c.command + " needs --graph FILE or --construct");
}

std::string num(std::uint64_t v) { return std::to_string(v); }

Output cmd_construct(const RunConfig& c) {
  const long n = need_n(c);
  const Beta beta = need_beta(c);
  const auto params = extremal_params(n, beta, c.inner_threshold);
  const Graph g = build_extremal(n, beta, c.inner_threshold);
  const int p = beta.p();
  const auto counts = count_cliques(g, static_cast<int>(std::min<long>(p + 2, n)));
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < params.v0_size; ++v) inner.push_back(v);
  const auto v0 = count_cliques(induced_subgraph(g, VertexSet::of(static_cast<std::size_t>(n), inner)),
                                static_cast<int>(std::min<long>(p + 1, params.v0_size)));
  std::vector<std::uint64_t> v0_counts(v0.counts.begin(), v0.counts.end());

  Output o;
  o.result["graph6"] = serialize_graph6(g);
  o.result["params"] = {{"n", params.n},
                        {"beta", to_string(params.beta)},
                        {"p", params.p},
                        {"delta", params.delta},
                        {"v0_size", params.v0_size},
                        {"class_size", params.class_size},
                        {"v0_degree", params.v0_degree},
                        {"feasibility", to_string(params.feasibility)}};
  o.header = {"r", "k_r", "g_r*n^r", "predicted", "match"};
  std::ostringstream text;
  text << serialize_graph6(g) << '\n';
  text << "p=" << p << " delta=" << params.delta << " |V0|=" << params.v0_size << " class_size=" << params.class_size
       << " feasibility=" << to_string(params.feasibility) << '\n';
  json table = json::array();
  bool all_match = true;
  for (int r = 2; r <= p + 1 && r <= n; ++r) {
    const Rational extremal = g_r(beta, r) * pow(Rational(n), static_cast<unsigned>(r));
    const Rational predicted = predicted_k_r(n, beta, r, v0_counts);
    const bool match = to_rational(counts.k(r)) == predicted;
    all_match = all_match && match;
    table.push_back({{"r", r}, {"k_r", counts.k(r)}, {"g_r_n_r", to_string(extremal)}, {"predicted", to_string(predicted)}, {"match", match}});
    o.rows.push_back({std::to_string(r), num(counts.k(r)), to_string(extremal), to_string(predicted), match ? "true" : "false"});
    text << "k_" << r << " = " << counts.k(r) << "  (g_" << r << " n^" << r << " = " << to_string(extremal)
         << ", predicted " << to_string(predicted) << (match ? ")" : ") MISMATCH") << '\n';
  }
  const bool regular = is_regular(g, static_cast<int>(params.delta));
  const std::uint64_t k_next = n >= p + 2 ? counts.k(p + 2) : 0;
  o.result["counts"] = table;
  o.result["regular"] = regular;
  o.result["k_p_plus_2"] = k_next;
  text << "regular=" << (regular ? "true" : "false") << " k_" << p + 2 << " = " << k_next << '\n';
  o.text = text.str();
  if (!all_match || !regular || k_next != 0) o.status = kExitViolation;
  return o;
}

Output cmd_count(const RunConfig& c) {
  std::string source;
  const Graph g = input_graph(c, source);
  const int r_max = c.r ? *c.r : g.order();
  const auto stats = count_cliques(g, r_max);
  Output o;
  o.result["source"] = source;
  o.result["n"] = g.order();
  o.result["edges"] = g.edge_count();
  o.header = {"r", "k_r"};
  json table = json::array();
  std::ostringstream text;
  text << "n=" << g.order() << " edges=" << g.edge_count() << '\n';
  for (int r = 1; r <= r_max; ++r) {
    if (!c.r && r > 1 && stats.k(r) == 0) break;
    table.push_back({{"r", r}, {"k_r", stats.k(r)}});
    o.rows.push_back({std::to_string(r), num(stats.k(r))});
    text << "k_" << r << " = " << stats.k(r) << '\n';
  }
  o.result["counts"] = table;
  o.text = text.str();
  return o;
}

Output cmd_gr(const RunConfig& c) {
  const Beta beta = need_beta(c);
  const int p = beta.p();
  Output o;
  o.header = {"r", "g_r"};
  if (c.n) o.header.push_back("g_r*n^r");
  std::ostringstream text;
  text << "beta=" << beta.str() << " p=" << p << '\n';
  json table = json::array();
  for (int r = 1; r <= p + 1; ++r) {
    const Rational g = g_r(beta, r);
    json row = {{"r", r}, {"g_r", to_string(g)}};
    std::vector<std::string> csv = {std::to_string(r), to_string(g)};
    text << "g_" << r << " = " << to_string(g);
    if (c.n) {
      const Rational scaled = g * pow(Rational(*c.n), static_cast<unsigned>(r));
      row["g_r_n_r"] = to_string(scaled);
      csv.push_back(to_string(scaled));
      text << "  (n^" << r << " times: " << to_string(scaled) << ')';
    }
    text << '\n';
    table.push_back(row);
    o.rows.push_back(csv);
  }
  o.result["g"] = table;

  json identities = json::array();
  auto record = [&](const VerificationReport& rep) {
    identities.push_back(to_json(rep));
    text << to_text(rep);
    if (!rep.ok()) o.status = kExitViolation;
  };
  for (int t = 2; t <= p; ++t) {
    record(check_identity_g(beta, t, 1));
    record(check_identity_g(beta, t, 2));
  }
  if (p >= 2) record(check_identity_g(beta, 0, 3));
  o.result["identities"] = identities;

  if (p >= 2) {
    const auto table_c = coefficient_table(beta);
    json coefficients = json::array();
    for (int t = 2; t <= p; ++t) {
      const auto i = static_cast<std::size_t>(t);
      coefficients.push_back({{"t", t}, {"C", to_string(table_c.C[i])}, {"A", to_string(table_c.A[i])}, {"B", to_string(table_c.B[i])}});
      text << "C_" << t << " = " << to_string(table_c.C[i]) << "  A_" << t << " = " << to_string(table_c.A[i]) << "  B_" << t
           << " = " << to_string(table_c.B[i]) << '\n';
    }
    o.result["coefficients"] = coefficients;
    const int r = r_of_beta(beta);
    o.result["r_of_beta"] = r;
    text << "r(beta) = " << r << '\n';
  }
  o.text = text.str();
  return o;
}

Output reports_output(const std::vector<VerificationReport>& reports) {
  Output o;
  o.header = {"check", "params", "ok", "holds", "equality", "slack", "instances", "violations"};
  json list = json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    text << to_text(r);
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    o.rows.push_back({r.check_id, params, r.ok() ? "true" : "false", r.holds ? "true" : "false",
                      r.equality ? "true" : "false", to_string(r.slack), num(r.instances), num(r.violations)});
    if (!r.ok()) o.status = kExitViolation;
  }
  o.result["reports"] = list;
  o.text = text.str();
  return o;
}

Output cmd_verify(const RunConfig& c) {
  std::string source;
  const Graph g = input_graph(c, source);
  const Beta beta = need_beta(c);
  const Suite suite = parse_suite(c.suite);
  Analysis a(g, beta);
  std::vector<VerificationReport> reports;
  if (!c.pairs.empty()) {
    if (suite != Suite::Ratio) throw InputError("--pairs applies to --suite ratio only");
    reports.push_back(verify_ratio_chain(a, c.pairs));
  } else {
    reports = run_suite(a, suite);
  }
  Output o = reports_output(reports);
  o.result["source"] = source;
  o.result["graph6"] = serialize_graph6(g);
  o.text = "source=" + source + " graph6=" + serialize_graph6(g) + "\n" + o.text;
  return o;
}

int brute_delta(const RunConfig& c, long n) {
  if (c.delta) return *c.delta;
  const Beta beta = need_beta(c);
  const Rational d = beta.min_degree(n);
  if (!is_integer(d)) throw DomainError("(1-beta)n = " + to_string(d) + " is not an integer; pass --delta");
  return static_cast<int>(d.get_num().get_si());
}

Output cmd_brute(const RunConfig& c) {
  const long n = need_n(c);
  const int r = need_r(c);
  const int delta = brute_delta(c, n);
  SearchOptions options;
  options.threshold = c.threshold;
  options.mode = degree_mode(c);
  const auto result = brute_force_k_r(static_cast<int>(n), delta, r, options);
  Output o;
  o.result = to_json(result);
  std::ostringstream text;
  text << "k_" << r << "(" << n << ", " << delta << ") = " << result.minimum << "  [" << to_string(result.mode) << ", "
       << result.graphs_scanned << " graphs scanned]\n";
  if (c.beta) {
    const Rational bound = g_r(Beta::parse(*c.beta), r) * pow(Rational(n), static_cast<unsigned>(r));
    o.result["g_r_n_r"] = to_string(bound);
    text << "g_" << r << "(beta) n^" << r << " = " << to_string(bound) << '\n';
  }
  o.header = {"witness_graph6"};
  for (const auto& w : result.witnesses) {
    text << "witness " << serialize_graph6(w) << '\n';
    o.rows.push_back({serialize_graph6(w)});
  }
  o.text = text.str();
  return o;
}

Output cmd_uniqueness(const RunConfig& c) {
  SearchOptions options;
  options.threshold = c.threshold;
  options.mode = degree_mode(c);
  const auto rep = check_extremal_uniqueness(static_cast<int>(need_n(c)), need_beta(c), need_r(c), options);
  return reports_output({rep});
}

Output cmd_sweep(const RunConfig& c) {
  CampaignConfig config;
  config.n = static_cast<int>(need_n(c));
  config.beta = need_beta(c).value();
  config.trials = c.trials;
  config.seed = c.seed;
  config.suite = parse_suite(c.suite);
  if (c.trials < 0) throw InputError("--trials must be non-negative");
  const auto summary = run_campaign(config);
  Output o;
  o.result = to_json(summary);
  o.header = {"check", "runs", "failures", "equalities", "min_slack"};
  std::ostringstream text;
  text << "n=" << config.n << " beta=" << to_string(config.beta) << " delta=" << summary.delta << " trials=" << config.trials
       << " seed=" << config.seed << '\n';
  for (const auto& e : summary.entries) {
    o.rows.push_back({e.check, num(e.runs), num(e.failures), num(e.equalities), to_string(e.min_slack)});
    text << (e.failures ? "FAIL " : "PASS ") << e.check << " runs=" << e.runs << " failures=" << e.failures
         << " equalities=" << e.equalities << " min_slack=" << to_string(e.min_slack) << '\n';
    for (const auto& w : e.witnesses) text << "  witness " << w << '\n';
  }
  text << "violations: " << summary.failures() << '\n';
  o.text = text.str();
  if (summary.failures() > 0) o.status = kExitViolation;
  return o;
}

Output cmd_epsilon(const RunConfig& c) {
  if (!c.p) throw InputError("epsilon needs --p");
  const Rational resolution = parse_rational(c.resolution);
  const auto bound = epsilon_p_scan(*c.p, resolution);
  Output o;
  o.result = {{"p", bound.p},
              {"resolution", to_string(bound.resolution)},
              {"lower_bound", to_string(bound.lower_bound)},
              {"certified_steps", bound.certified_steps},
              {"reached_range_end", bound.reached_range_end}};
  o.header = {"p", "resolution", "lower_bound", "certified_steps", "reached_range_end"};
  o.rows.push_back({std::to_string(bound.p), to_string(bound.resolution), to_string(bound.lower_bound),
                    std::to_string(bound.certified_steps), bound.reached_range_end ? "true" : "false"});
  o.text = "epsilon_" + std::to_string(bound.p) + " >= " + to_string(bound.lower_bound) + "  (" +
           std::to_string(bound.certified_steps) + " steps of " + to_string(bound.resolution) + ")\n";
  if (bound.lower_bound <= 0) o.status = kExitViolation;
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string render(const RunConfig& c, const Output& o) {
  std::ostringstream out;
  if (c.format == "json") {
    json doc;
    doc["tool"] = "cliquemin";
    doc["version"] = CLIQUEMIN_VERSION;
    doc["config"] = config_json(c);
    doc["status"] = o.status;
    doc["result"] = o.result;
    out << doc.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << "# cliquemin " << CLIQUEMIN_VERSION << '\n' << "# " << config_line(c) << '\n';
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
      out << '\n';
    };
    line(o.header);
    for (const auto& row : o.rows) line(row);
  } else {
    out << "cliquemin " << CLIQUEMIN_VERSION << '\n' << "config: " << config_line(c) << '\n' << o.text;
    out << "status: " << (o.status == kExitOk ? "ok" : "violation") << '\n';
  }
  return out.str();
}

Output dispatch(const RunConfig& c) {
  if (c.command == "construct") return cmd_construct(c);
  if (c.command == "count") return cmd_count(c);
  if (c.command == "gr") return cmd_gr(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "brute") return cmd_brute(c);
  if (c.command == "uniqueness") return cmd_uniqueness(c);
  if (c.command == "sweep") return cmd_sweep(c);
  if (c.command == "epsilon") return cmd_epsilon(c);
  throw InputError("unknown command \"" + c.command + "\"");
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("pair \"" + item + "\" is not of the form t:s", 0);
    try {
      std::size_t used = 0;
      const int t = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string rest = item.substr(colon + 1);
      const int s = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(item);
      pairs.emplace_back(t, s);
    } catch (const std::logic_error&) {
      throw ParseError("pair \"" + item + "\" is not of the form t:s", 0);
    }
  }
  return pairs;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "json" && config.format != "csv" && config.format != "text") {
    err << "error: --format must be json, csv or text\n";
    return kExitError;
  }
  Output o;
  try {
    o = dispatch(config);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitError;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitError;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitError;
  }
  const std::string doc = render(config, o);
  if (config.output.empty()) {
    out << doc;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.output << '\n';
      return kExitError;
    }
    file << doc;
  }
  return o.status;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique counts in graphs of bounded minimum degree: constructions, exact counts and inequality checks"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  RunConfig c;
  long n = 0;
  std::string beta;
  int r = 0, delta = 0, p = 0;
  std::string pairs;
  app.add_option("--n", n, "Graph order");
  app.add_option("--beta", beta, "Degree deficiency as an exact fraction p/q; (1-beta)n is the minimum degree");
  app.add_option("--r", r, "Clique order");
  app.add_option("--delta", delta, "Minimum degree for brute (default (1-beta)n)");
  app.add_option("--p", p, "p for epsilon");
  app.add_option("--pairs", pairs, "Ratio pairs t:s, comma separated (verify --suite ratio)");
  app.add_option("--seed", c.seed, "Campaign seed");
  app.add_option("--trials", c.trials, "Number of random graphs for sweep");
  app.add_option("--threshold", c.threshold, "Largest n for exhaustive graph search");
  app.add_option("--inner-threshold", c.inner_threshold, "Largest inner part searched exhaustively by the construction");
  app.add_option("--suite", c.suite, "basic, p2, p3, phi, ratio or all");
  app.add_option("--mode", c.mode, "Minimum degree exactly or at-least (brute, uniqueness)");
  app.add_option("--graph", c.graph, "graph6 or edge-list file");
  app.add_flag("--construct", c.construct, "Use the extremal construction for --n/--beta as the input graph");
  app.add_option("--resolution", c.resolution, "Scan step for epsilon as a fraction");
  app.add_option("--format", c.format, "json, csv or text");
  app.add_option("--output", c.output, "Write the report to this file");

  app.add_subcommand("construct", "Build a member of the extremal family and report its clique counts");
  app.add_subcommand("count", "Clique counts k_r of an input graph");
  app.add_subcommand("gr", "Table of g_r(beta) and the identities between consecutive terms");
  app.add_subcommand("verify", "Run a suite of inequality checks on a graph");
  app.add_subcommand("brute", "Exhaustive minimum of k_r over graphs with minimum degree delta");
  app.add_subcommand("uniqueness", "Compare the exhaustive minimum with g_r(beta)n^r and test the minimisers for membership");
  app.add_subcommand("sweep", "Random-graph campaign over a check suite");
  app.add_subcommand("epsilon", "Certified lower bound on epsilon_p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (app.count("--n")) c.n = n;
  if (app.count("--beta")) c.beta = beta;
  if (app.count("--r")) c.r = r;
  if (app.count("--delta")) c.delta = delta;
  if (app.count("--p")) c.p = p;
  if (app.count("--pairs")) {
    try {
      c.pairs = parse_pairs(pairs);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << '\n';
      return kExitError;
    }
  }
  return run(c, out, err);
}

}  // namespace cliquemin
