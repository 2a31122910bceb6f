#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquemin/rational.hpp"
#include "cliquemin/verifier.hpp"

namespace cliquemin {

struct CampaignConfig {
  int n = 12;
  Rational beta{1, 3};
  long trials = 100;
  std::uint64_t seed = 1;
  Suite suite = Suite::All;
};

/// Per-check tally over the graphs of one campaign.
struct CampaignEntry {
  std::string check;  // check_id plus its shape parameters, e.g. "phi t=2 s=4"
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;
  std::uint64_t equalities = 0;
  Rational min_slack;
  std::vector<std::string> witnesses;  // "seed=<s> graph6=<g>: <first failing line>"
};

struct CampaignSummary {
  CampaignConfig config;
  int delta = 0;
  std::vector<CampaignEntry> entries;  // in order of first appearance

  std::uint64_t failures() const;
};

/// Minimum degree used for random graphs: ⌈(1-β)n⌉.
int campaign_min_degree(int n, const Rational& beta);

/// Seed of graph i of a campaign.
std::uint64_t campaign_graph_seed(std::uint64_t seed, long i);

/// Graph i of a campaign, all with minimum degree δ. By i mod 4:
///   0: K_n thinned until no edge is removable;
///   1: K_n thinned by a random number of removals;
///   2: a random complete (p+1)-partite graph (K_{p+2}-free), lightly thinned;
///   3: near_extremal_graph.
/// Kinds 2 and 3 fall back to kind 1 when no (p+1)-partite graph with
/// classes of at most n-δ vertices exists.
Graph campaign_graph(const CampaignConfig& config, long i);

/// A random complete (p+1)-partite graph with classes of at most n-δ
/// vertices, 1 to 6 random edges added inside the classes, then thinned by
/// 0, n or unboundedly many removals. These graphs carry heavy edges and
/// triangles next to the extremal shape; at β = 3/10, n = 20 a good share
/// have bad 4-cliques. DomainError when no such partite graph exists.
Graph near_extremal_graph(int n, const Rational& beta, std::uint64_t seed);

/// Runs the suite on every graph. Graphs are split across worker threads;
/// tallies are merged in graph order, so the summary does not depend on
/// the worker count.
CampaignSummary run_campaign(const CampaignConfig& config);

nlohmann::json to_json(const CampaignSummary& summary);

}  // namespace cliquemin
