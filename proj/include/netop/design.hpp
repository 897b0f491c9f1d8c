#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netop/catalog.hpp"
#include "netop/fleet.hpp"
#include "netop/nesting.hpp"

namespace netop {

struct Port {
  std::string name;
  Vec2 pos;

  friend bool operator==(const Port&, const Port&) = default;
};

struct SearchArea {
  Vec2 pos;
  double required_effort = 0;

  friend bool operator==(const SearchArea&, const SearchArea&) = default;
};

struct Scenario {
  Catalog catalog;
  std::vector<Port> ports;
  SearchArea area;
  double budget = 0;
  double horizon = 0;

  const Port& port(const std::string& name) const;  // throws UnknownPort

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

Scenario make_scenario(Catalog catalog, std::vector<Port> ports, SearchArea area,
                       double budget, double horizon);

// A candidate fleet: a nesting forest whose roots are based at named
// ports.  Zero-speed kinds may not be roots unless their port sits on
// the search area; they have to be ferried.
struct Design {
  NestedFleet fleet;
  std::vector<std::pair<std::size_t, std::string>> root_ports;  // (root index, port), sorted

  friend bool operator==(const Design&, const Design&) = default;
};

void validate_design(const Design& design, const Scenario& scenario);

struct RootArrival {
  std::size_t root = 0;
  double arrival_time = 0;

  friend bool operator==(const RootArrival&, const RootArrival&) = default;
};

struct EffortReport {
  double total_cost = 0;
  std::vector<RootArrival> arrivals;  // one per root, sorted by root index
  double total_effort = 0;
  bool feasible = false;

  friend bool operator==(const EffortReport&, const EffortReport&) = default;
};

struct ScoredDesign {
  Design design;
  EffortReport report;

  friend bool operator==(const ScoredDesign&, const ScoredDesign&) = default;
};

// Linear effort model: every agent of a root's subtree searches at its
// kind's rate from the root's arrival until the horizon.  Cost is the
// sum of unit costs; feasible means cost within budget.
EffortReport evaluate_design(const Design& design, const Scenario& scenario);

// Every capacity-valid port-rooted forest with at most max_agents
// agents, one representative per kind-level symmetry class, in a fixed
// deterministic order starting with the empty design.
std::vector<Design> enumerate_designs(const Scenario& scenario, std::size_t max_agents);

inline constexpr std::size_t kDefaultSpaceCap = 1'000'000;

// Exhaustive optimum over enumerate_designs' space: the feasible design
// of maximal effort, ties broken by lower cost then enumeration order.
// Throws SpaceCapExceeded if the space is larger than space_cap.
ScoredDesign brute_force_best(const Scenario& scenario, std::size_t max_agents,
                              std::size_t space_cap = kDefaultSpaceCap);

struct BeamParams {
  std::size_t width = 16;
  std::size_t max_agents = 8;
  // Accepted for the CLI's reproducibility contract; the search itself
  // is deterministic and draws no randomness from it.
  std::uint64_t seed = 0;
};

// Grows designs one addition at a time (new root at a port, or a new
// unit nested under an asset with spare capacity), keeping the top-w
// candidates per level by effort-per-cost then effort.  Returns the best
// feasible design seen; with a width covering the whole space this
// matches brute_force_best's effort exactly.
ScoredDesign beam_search(const Scenario& scenario, const BeamParams& params);

// Subsequence of candidates not dominated in (lower cost, higher
// effort), in stable input order.
std::vector<ScoredDesign> pareto_front(const std::vector<ScoredDesign>& candidates);

}  // namespace netop
