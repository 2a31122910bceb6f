#include "cliquemin/campaign.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cliquemin/errors.hpp"
#include "cliquemin/graph_io.hpp"
#include "cliquemin/oracle.hpp"
#include "cliquemin/parallel.hpp"

namespace cliquemin {

namespace {

constexpr const char* kShapeParams[] = {"s", "t", "variant", "recursion"};

std::string entry_key(const VerificationReport& r) {
  std::string key = r.check_id;
  for (const char* name : kShapeParams) {
    if (auto it = r.params.find(name); it != r.params.end()) key += " " + std::string(name) + "=" + it->second;
  }
  return key;
}

std::string first_failure(const VerificationReport& r) {
  if (!r.holds && r.parts.empty()) {
    std::string line = r.check_id + " slack=" + to_string(r.slack);
    if (!r.witnesses.empty()) line += " at " + r.witnesses.front();
    return line;
  }
  for (const auto& [name, value] : r.conditions)
    if (!value) return r.check_id + " condition failed: " + name;
  for (const auto& part : r.parts)
    if (!part.ok()) return first_failure(part);
  return r.check_id + " slack=" + to_string(r.slack);
}

struct GraphOutcome {
  std::string graph6;
  std::vector<VerificationReport> reports;
};

}  // namespace

std::uint64_t CampaignSummary::failures() const {
  std::uint64_t total = 0;
  for (const auto& e : entries) total += e.failures;
  return total;
}

int campaign_min_degree(int n, const Rational& beta) {
  return static_cast<int>(ceil((1 - beta) * n).get_si());
}

std::uint64_t campaign_graph_seed(std::uint64_t seed, long i) {
  // splitmix64 step, so neighbouring campaign seeds do not share graphs.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph campaign_graph(const CampaignConfig& config, long i) {
  const int n = config.n;
  const int delta = campaign_min_degree(n, config.beta);
  const int p = Beta(config.beta).p();
  const std::uint64_t s = campaign_graph_seed(config.seed, i);
  std::mt19937_64 rng(s);
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::uniform_int_distribution<std::size_t> budget(0, pairs);
  const int kind = static_cast<int>(i % 4);
  const int max_part = n - delta;
  const bool partite_possible = static_cast<long>(p + 1) * max_part >= n;

  if (kind == 0) return random_graph_min_degree(n, delta, s + 1);
  if (kind == 1 || !partite_possible) return random_graph_min_degree(n, delta, s + 1, budget(rng));

  if (kind == 3) return near_extremal_graph(n, config.beta, s + 1);
  std::uniform_int_distribution<std::size_t> thin(0, static_cast<std::size_t>(n));
  return thin_to_min_degree(random_partite_graph(n, p + 1, max_part, s + 1), delta, s + 2, thin(rng));
}

Graph near_extremal_graph(int n, const Rational& beta, std::uint64_t seed) {
  const int delta = campaign_min_degree(n, beta);
  const int parts = Beta(beta).p() + 1;
  const int max_part = n - delta;
  if (static_cast<long>(parts) * max_part < n) {
    throw DomainError("no (p+1)-partite graph on " + std::to_string(n) + " vertices has minimum degree " + std::to_string(delta));
  }
  std::mt19937_64 rng(seed);
  const Graph base = random_partite_graph(n, parts, max_part, rng());
  std::vector<Edge> edges = base.edges();
  std::vector<Edge> inside;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!base.adjacent(u, v)) inside.emplace_back(u, v);
  std::shuffle(inside.begin(), inside.end(), rng);
  const std::size_t add = std::min(inside.size(), std::uniform_int_distribution<std::size_t>(1, 6)(rng));
  edges.insert(edges.end(), inside.begin(), inside.begin() + static_cast<std::ptrdiff_t>(add));
  const std::size_t budgets[] = {0, static_cast<std::size_t>(n), std::numeric_limits<std::size_t>::max()};
  const std::size_t budget = budgets[std::uniform_int_distribution<int>(0, 2)(rng)];
  return thin_to_min_degree(Graph::from_edges(n, edges), delta, rng(), budget);
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  const Beta beta(config.beta);
  std::vector<GraphOutcome> outcomes(static_cast<std::size_t>(std::max(config.trials, 0L)));
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(outcomes.size(), 1));
  run_workers(workers, [&](std::size_t w) {
    for (std::size_t i = w; i < outcomes.size(); i += workers) {
      const Graph g = campaign_graph(config, static_cast<long>(i));
      Analysis a(g, beta);
      outcomes[i].graph6 = serialize_graph6(g);
      outcomes[i].reports = run_suite(a, config.suite);
    }
  });

  CampaignSummary summary;
  summary.config = config;
  summary.delta = campaign_min_degree(config.n, config.beta);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (const auto& r : outcomes[i].reports) {
      const std::string key = entry_key(r);
      auto [it, inserted] = index.emplace(key, summary.entries.size());
      if (inserted) summary.entries.push_back({key, 0, 0, 0, r.slack, {}});
      auto& e = summary.entries[it->second];
      ++e.runs;
      if (r.equality) ++e.equalities;
      if (r.slack < e.min_slack) e.min_slack = r.slack;
      if (!r.ok()) {
        ++e.failures;
        if (e.witnesses.size() < VerificationReport::kWitnessCap) {
          e.witnesses.push_back("seed=" + std::to_string(campaign_graph_seed(config.seed, static_cast<long>(i))) +
                                " graph6=" + outcomes[i].graph6 + ": " + first_failure(r));
        }
      }
    }
  }
  return summary;
}

nlohmann::json to_json(const CampaignSummary& summary) {
  nlohmann::json j;
  j["n"] = summary.config.n;
  j["beta"] = to_string(summary.config.beta);
  j["delta"] = summary.delta;
  j["trials"] = summary.config.trials;
  j["seed"] = summary.config.seed;
  j["suite"] = to_string(summary.config.suite);
  j["failures"] = summary.failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& e : summary.entries) {
    j["checks"].push_back({{"check", e.check},
                           {"runs", e.runs},
                           {"failures", e.failures},
                           {"equalities", e.equalities},
                           {"min_slack", to_string(e.min_slack)},
                           {"witnesses", e.witnesses}});
  }
  return j;
}

}  // namespace cliquemin
