#include "netop/design.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "netop/error.hpp"

namespace netop {

const Port& Scenario::port(const std::string& name) const {
  for (const Port& p : ports) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::UnknownPort, "port not in scenario", {{"port", name}});
}

Scenario make_scenario(Catalog catalog, std::vector<Port> ports, SearchArea area,
                       double budget, double horizon) {
  if (ports.empty()) {
    throw Error(ErrorCode::InvalidArgument, "scenario needs at least one port");
  }
  std::set<std::string> names;
  for (const Port& p : ports) {
    if (!names.insert(p.name).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate port name", {{"port", p.name}});
    }
  }
  if (!std::isfinite(horizon) || horizon <= 0) {
    throw Error(ErrorCode::InvalidArgument, "horizon must be finite and positive",
                {{"horizon", horizon}});
  }
  if (!std::isfinite(budget) || budget < 0) {
    throw Error(ErrorCode::InvalidArgument, "budget must be finite and non-negative",
                {{"budget", budget}});
  }
  if (!std::isfinite(area.required_effort) || area.required_effort < 0) {
    throw Error(ErrorCode::InvalidArgument, "required effort must be finite and non-negative",
                {{"required_effort", area.required_effort}});
  }
  return Scenario{std::move(catalog), std::move(ports), area, budget, horizon};
}

namespace {

bool may_root_at(const AgentKind& kind, const Port& port, const SearchArea& area) {
  return kind.speed > 0 || distance(port.pos, area.pos) == 0;
}

std::vector<std::size_t> design_roots(const Design& d) {
  std::vector<std::size_t> roots;
  for (std::size_t v = 0; v < d.fleet.size(); ++v) {
    if (nesting_root(v, d.fleet.parent) == v) roots.push_back(v);
  }
  return roots;
}

std::vector<std::vector<std::size_t>> children_lists(const NestedFleet& fleet) {
  std::vector<std::vector<std::size_t>> children(fleet.size());
  for (const ParentEdge& e : fleet.parent) children[e.second].push_back(e.first);
  return children;
}

}  // namespace

void validate_design(const Design& design, const Scenario& scenario) {
  validate_nested_fleet(design.fleet, scenario.catalog);
  const std::vector<std::size_t> roots = design_roots(design);
  if (!std::is_sorted(design.root_ports.begin(), design.root_ports.end())) {
    throw Error(ErrorCode::BadRoot, "root assignments not sorted by root index");
  }
  std::vector<std::size_t> assigned;
  for (const auto& [root, port_name] : design.root_ports) assigned.push_back(root);
  if (assigned != roots) {
    throw Error(ErrorCode::BadRoot, "root assignments must cover exactly the forest roots",
                {{"roots", roots}, {"assigned", assigned}});
  }
  for (const auto& [root, port_name] : design.root_ports) {
    const Port& port = scenario.port(port_name);
    if (!(design.fleet.agents[root].pos == port.pos)) {
      throw Error(ErrorCode::BadPosition, "root is not positioned at its port",
                  {{"root", root}, {"port", port_name}});
    }
    const AgentKind& kind = scenario.catalog.at(design.fleet.agents[root].kind);
    if (!may_root_at(kind, port, scenario.area)) {
      throw Error(ErrorCode::BadRoot,
                  "zero-speed kind cannot be a root away from the search area",
                  {{"root", root}, {"kind", kind.name}, {"port", port_name}});
    }
  }
}

EffortReport evaluate_design(const Design& design, const Scenario& scenario) {
  EffortReport report;
  for (const LocatedAgent& agent : design.fleet.agents) {
    report.total_cost += scenario.catalog.at(agent.kind).unit_cost;
  }
  const auto children = children_lists(design.fleet);
  for (const auto& [root, port_name] : design.root_ports) {
    const Port& port = scenario.port(port_name);
    const AgentKind& kind = scenario.catalog.at(design.fleet.agents[root].kind);
    const double dist = distance(port.pos, scenario.area.pos);
    double arrival = 0;
    if (dist > 0) {
      arrival = kind.speed > 0 ? dist / kind.speed : std::numeric_limits<double>::infinity();
    }
    const double on_scene = std::isfinite(arrival) ? std::max(0.0, scenario.horizon - arrival) : 0.0;
    double rate_sum = 0;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      rate_sum += scenario.catalog.at(design.fleet.agents[v].kind).search_rate;
      stack.insert(stack.end(), children[v].begin(), children[v].end());
    }
    report.total_effort += rate_sum * on_scene;
    report.arrivals.push_back(RootArrival{root, arrival});
  }
  report.feasible = report.total_cost <= scenario.budget;
  return report;
}

namespace {

// Canonical rooted trees over the catalog, generated in increasing size
// with children as non-decreasing arena indices; the index order doubles
// as the symmetry-class representative.
struct TreeNode {
  std::string kind;
  std::vector<std::size_t> children;  // arena indices
  std::size_t size = 1;
};

std::vector<TreeNode> build_tree_arena(const Catalog& catalog, std::size_t max_size) {
  std::vector<TreeNode> arena;
  for (std::size_t size = 1; size <= max_size; ++size) {
    const std::size_t smaller_end = arena.size();
    for (const AgentKind& kind : catalog.kinds()) {
      std::vector<std::size_t> chosen;
      std::map<std::string, std::size_t> counts;
      const std::function<void(std::size_t, std::size_t)> pick =
          [&](std::size_t budget, std::size_t from) {
            if (budget == 0) {
              arena.push_back(TreeNode{kind.name, chosen, size});
              return;
            }
            for (std::size_t idx = from; idx < smaller_end; ++idx) {
              if (arena[idx].size > budget) break;  // arena sizes are non-decreasing
              const std::string& child_kind = arena[idx].kind;
              if (counts[child_kind] >= catalog.capacity_for(kind.name, child_kind)) continue;
              chosen.push_back(idx);
              counts[child_kind] += 1;
              pick(budget - arena[idx].size, idx);
              counts[child_kind] -= 1;
              chosen.pop_back();
            }
          };
      pick(size - 1, 0);
    }
  }
  return arena;
}

// One design candidate: trees planted at ports, DFS order of choices is
// (port ascending, arena index non-decreasing), which is canonical.
using Planting = std::vector<std::pair<std::size_t, std::size_t>>;  // (port, tree)

// Enumerates plantings; visit returns false to stop early.
bool for_each_planting(const Scenario& scenario, const std::vector<TreeNode>& arena,
                       std::size_t max_agents,
                       const std::function<bool(const Planting&)>& visit) {
  std::vector<std::vector<std::size_t>> allowed(scenario.ports.size());
  for (std::size_t p = 0; p < scenario.ports.size(); ++p) {
    for (std::size_t t = 0; t < arena.size(); ++t) {
      if (may_root_at(scenario.catalog.at(arena[t].kind), scenario.ports[p], scenario.area)) {
        allowed[p].push_back(t);
      }
    }
  }
  Planting chosen;
  const std::function<bool(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t port, std::size_t from, std::size_t budget) -> bool {
    if (port == scenario.ports.size()) return visit(chosen);
    if (!rec(port + 1, 0, budget)) return false;
    for (std::size_t pos = from; pos < allowed[port].size(); ++pos) {
      const std::size_t t = allowed[port][pos];
      if (arena[t].size > budget) continue;
      chosen.emplace_back(port, t);
      const bool keep_going = rec(port, pos, budget - arena[t].size);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  return rec(0, 0, max_agents);
}

Design planting_to_design(const Scenario& scenario, const std::vector<TreeNode>& arena,
                          const Planting& planting) {
  Design design;
  const std::function<void(std::size_t, const Vec2&, std::size_t)> emit =
      [&](std::size_t tree, const Vec2& pos, std::size_t parent) {
        const std::size_t self = design.fleet.agents.size();
        design.fleet.agents.push_back(LocatedAgent{arena[tree].kind, pos});
        if (parent != self) design.fleet.parent.emplace_back(self, parent);
        for (const std::size_t child : arena[tree].children) emit(child, pos, self);
      };
  for (const auto& [port_idx, tree] : planting) {
    const Port& port = scenario.ports[port_idx];
    const std::size_t root = design.fleet.agents.size();
    emit(tree, port.pos, root);
    design.root_ports.emplace_back(root, port.name);
  }
  std::sort(design.fleet.parent.begin(), design.fleet.parent.end());
  return design;
}

}  // namespace

std::vector<Design> enumerate_designs(const Scenario& scenario, std::size_t max_agents) {
  const std::vector<TreeNode> arena = build_tree_arena(scenario.catalog, max_agents);
  std::vector<Design> designs;
  for_each_planting(scenario, arena, max_agents, [&](const Planting& planting) {
    designs.push_back(planting_to_design(scenario, arena, planting));
    return true;
  });
  return designs;
}

namespace {

// Better by effort, then by lower cost.  Strict: equal reports compare
// false, so the earlier candidate wins.
bool improves(const EffortReport& challenger, const EffortReport& incumbent) {
  if (challenger.total_effort != incumbent.total_effort) {
    return challenger.total_effort > incumbent.total_effort;
  }
  return challenger.total_cost < incumbent.total_cost;
}

}  // namespace

ScoredDesign brute_force_best(const Scenario& scenario, std::size_t max_agents,
                              std::size_t space_cap) {
  const std::vector<TreeNode> arena = build_tree_arena(scenario.catalog, max_agents);
  ScoredDesign best;
  bool have_best = false;
  std::size_t seen = 0;
  const bool completed =
      for_each_planting(scenario, arena, max_agents, [&](const Planting& planting) {
        if (++seen > space_cap) return false;
        Design design = planting_to_design(scenario, arena, planting);
        EffortReport report = evaluate_design(design, scenario);
        if (report.feasible && (!have_best || improves(report, best.report))) {
          best = ScoredDesign{std::move(design), std::move(report)};
          have_best = true;
        }
        return true;
      });
  if (!completed) {
    throw Error(ErrorCode::SpaceCapExceeded, "design space exceeds the configured cap",
                {{"cap", space_cap}});
  }
  return best;
}

namespace {

// Mutable forest state for the beam, canonicalized after every growth
// step so structurally equal designs collapse onto one key.
struct GrowTree {
  std::string kind;
  std::vector<GrowTree> children;
};

std::string tree_key(const GrowTree& t) {
  std::string key = t.kind;
  key += '(';
  for (const GrowTree& c : t.children) {
    key += tree_key(c);
    key += ',';
  }
  key += ')';
  return key;
}

void canonicalize(GrowTree& t) {
  for (GrowTree& c : t.children) canonicalize(c);
  std::sort(t.children.begin(), t.children.end(),
            [](const GrowTree& a, const GrowTree& b) { return tree_key(a) < tree_key(b); });
}

struct GrowState {
  std::vector<std::pair<std::size_t, GrowTree>> roots;  // (port, tree)

  void canonicalize_all() {
    for (auto& [port, tree] : roots) canonicalize(tree);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return tree_key(a.second) < tree_key(b.second);
    });
  }

  std::string key() const {
    std::string key;
    for (const auto& [port, tree] : roots) {
      key += std::to_string(port);
      key += ':';
      key += tree_key(tree);
      key += ';';
    }
    return key;
  }
};

Design state_to_design(const Scenario& scenario, const GrowState& state) {
  Design design;
  const std::function<void(const GrowTree&, const Vec2&, std::size_t)> emit =
      [&](const GrowTree& tree, const Vec2& pos, std::size_t parent) {
        const std::size_t self = design.fleet.agents.size();
        design.fleet.agents.push_back(LocatedAgent{tree.kind, pos});
        if (parent != self) design.fleet.parent.emplace_back(self, parent);
        for (const GrowTree& child : tree.children) emit(child, pos, self);
      };
  for (const auto& [port_idx, tree] : state.roots) {
    const Port& port = scenario.ports[port_idx];
    const std::size_t root = design.fleet.agents.size();
    emit(tree, port.pos, root);
    design.root_ports.emplace_back(root, port.name);
  }
  std::sort(design.fleet.parent.begin(), design.fleet.parent.end());
  std::sort(design.root_ports.begin(), design.root_ports.end());
  return design;
}

// All single-addition successors: a fresh root at some port, or a fresh
// leaf under an asset with spare capacity.
std::vector<GrowState> expand(const GrowState& state, const Scenario& scenario) {
  std::vector<GrowState> out;
  for (std::size_t p = 0; p < scenario.ports.size(); ++p) {
    for (const AgentKind& kind : scenario.catalog.kinds()) {
      if (!may_root_at(kind, scenario.ports[p], scenario.area)) continue;
      GrowState next = state;
      next.roots.emplace_back(p, GrowTree{kind.name, {}});
      out.push_back(std::move(next));
    }
  }
  // every vertex of every tree, addressed by its DFS path
  for (std::size_t r = 0; r < state.roots.size(); ++r) {
    std::vector<std::vector<std::size_t>> paths;
    const std::function<void(const GrowTree&, std::vector<std::size_t>&)> walk =
        [&](const GrowTree& tree, std::vector<std::size_t>& path) {
          paths.push_back(path);
          for (std::size_t c = 0; c < tree.children.size(); ++c) {
            path.push_back(c);
            walk(tree.children[c], path);
            path.pop_back();
          }
        };
    std::vector<std::size_t> path;
    walk(state.roots[r].second, path);
    for (const std::vector<std::size_t>& vertex_path : paths) {
      for (const AgentKind& kind : scenario.catalog.kinds()) {
        GrowState next = state;
        GrowTree* node = &next.roots[r].second;
        for (const std::size_t step : vertex_path) node = &node->children[step];
        std::size_t count = 0;
        for (const GrowTree& c : node->children) {
          if (c.kind == kind.name) ++count;
        }
        if (count >= scenario.catalog.capacity_for(node->kind, kind.name)) continue;
        node->children.push_back(GrowTree{kind.name, {}});
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace

ScoredDesign beam_search(const Scenario& scenario, const BeamParams& params) {
  GrowState empty;
  ScoredDesign best{state_to_design(scenario, empty), {}};
  best.report = evaluate_design(best.design, scenario);

  struct Candidate {
    GrowState state;
    std::string key;
    ScoredDesign scored;
  };

  std::vector<GrowState> frontier{empty};
  for (std::size_t level = 1; level <= params.max_agents && !frontier.empty(); ++level) {
    std::vector<Candidate> candidates;
    std::set<std::string> seen;
    for (const GrowState& state : frontier) {
      for (GrowState& next : expand(state, scenario)) {
        next.canonicalize_all();
        std::string key = next.key();
        if (!seen.insert(key).second) continue;
        Design design = state_to_design(scenario, next);
        EffortReport report = evaluate_design(design, scenario);
        if (!report.feasible) continue;  // additions only add cost
        candidates.push_back(Candidate{std::move(next), std::move(key),
                                       ScoredDesign{std::move(design), std::move(report)}});
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      // effort-per-cost, compared by cross-multiplication so zero cost is exact
      const double lhs = a.scored.report.total_effort * b.scored.report.total_cost;
      const double rhs = b.scored.report.total_effort * a.scored.report.total_cost;
      if (lhs != rhs) return lhs > rhs;
      if (a.scored.report.total_effort != b.scored.report.total_effort) {
        return a.scored.report.total_effort > b.scored.report.total_effort;
      }
      if (a.scored.report.total_cost != b.scored.report.total_cost) {
        return a.scored.report.total_cost < b.scored.report.total_cost;
      }
      return a.key < b.key;
    });
    if (candidates.size() > params.width) candidates.resize(params.width);
    frontier.clear();
    for (Candidate& c : candidates) {
      if (improves(c.scored.report, best.report)) best = c.scored;
      frontier.push_back(std::move(c.state));
    }
  }
  return best;
}

std::vector<ScoredDesign> pareto_front(const std::vector<ScoredDesign>& candidates) {
  std::vector<ScoredDesign> front;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const EffortReport& ri = candidates[i].report;
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      const EffortReport& rj = candidates[j].report;
      const bool weakly_better = rj.total_cost <= ri.total_cost && rj.total_effort >= ri.total_effort;
      const bool strictly_somewhere = rj.total_cost < ri.total_cost || rj.total_effort > ri.total_effort;
      if (weakly_better && strictly_somewhere) dominated = true;
    }
    if (!dominated) front.push_back(candidates[i]);
  }
  return front;
}

}  // namespace netop
