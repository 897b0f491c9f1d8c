#include "netop/nesting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "netop/error.hpp"

namespace netop {

namespace {

nlohmann::json edge_json(const ParentEdge& e) {
  return nlohmann::json::array({e.first, e.second});
}

// Structural forest checks shared by operations and fleets.  Expects the
// edge list sorted by (child, parent).  Throws DoubleParent before
// NestingCycle before CapacityExceeded so diagnostics are stable.
void validate_forest(std::size_t n, const std::vector<ParentEdge>& edges) {
  for (const ParentEdge& e : edges) {
    if (e.first == e.second) {
      throw Error(ErrorCode::SelfLoop, "vertex cannot carry itself", {{"edge", edge_json(e)}});
    }
    if (e.first >= n || e.second >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "nesting edge endpoint exceeds vertex count",
                  {{"edge", edge_json(e)}, {"vertex_count", n}});
    }
  }
  if (!std::is_sorted(edges.begin(), edges.end())) {
    throw Error(ErrorCode::InvalidArgument, "nesting edges not sorted");
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i] == edges[i + 1]) {
      throw Error(ErrorCode::InvalidArgument, "duplicate nesting edge",
                  {{"edge", edge_json(edges[i])}});
    }
    if (edges[i].first == edges[i + 1].first) {
      throw Error(ErrorCode::DoubleParent, "vertex has two parents",
                  {{"vertex", edges[i].first},
                   {"parents", nlohmann::json::array({edges[i].second, edges[i + 1].second})}});
    }
  }
  // Each vertex now has at most one parent; any cycle is a closed parent
  // chain.  Chase parents with a step bound.
  std::map<std::size_t, std::size_t> parent_of;
  for (const ParentEdge& e : edges) parent_of.emplace(e.first, e.second);
  for (const ParentEdge& e : edges) {
    std::size_t v = e.first;
    std::size_t steps = 0;
    auto it = parent_of.find(v);
    while (it != parent_of.end()) {
      v = it->second;
      if (++steps > n) {
        throw Error(ErrorCode::NestingCycle, "nesting relation contains a cycle",
                    {{"vertex", e.first}});
      }
      it = parent_of.find(v);
    }
  }
}

void require_capacity(const KindWord& kinds, const std::vector<ParentEdge>& edges,
                      const Catalog& catalog) {
  const std::vector<CapacityViolation> violations = check_capacity(kinds, edges, catalog);
  if (!violations.empty()) {
    const CapacityViolation& v = violations.front();
    throw Error(ErrorCode::CapacityExceeded, "carrier over per-kind capacity",
                {{"vertex", v.vertex}, {"kind", v.kind}, {"cap", v.cap}, {"actual", v.actual}});
  }
}

std::vector<ParentEdge> sorted_edges(std::vector<ParentEdge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::size_t NestingOp::output_size() const {
  std::size_t n = 0;
  for (const KindWord& w : inputs) n += w.size();
  return n;
}

KindWord NestingOp::output_word() const {
  KindWord out;
  for (const KindWord& w : inputs) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::size_t NestingOp::slot_offset(std::size_t slot) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < slot; ++i) n += inputs[i].size();
  return n;
}

KindWord NestedFleet::kind_word() const {
  KindWord out;
  out.reserve(agents.size());
  for (const LocatedAgent& a : agents) out.push_back(a.kind);
  return out;
}

std::vector<CapacityViolation> check_capacity(const KindWord& kinds,
                                              const std::vector<ParentEdge>& parent,
                                              const Catalog& catalog) {
  // children[v][kind] = number of direct children of v of that kind
  std::map<std::size_t, std::map<std::string, std::size_t>> children;
  for (const ParentEdge& e : parent) {
    children[e.second][kinds[e.first]] += 1;
  }
  std::vector<CapacityViolation> violations;
  for (const auto& [vertex, by_kind] : children) {
    for (const auto& [kind, count] : by_kind) {
      const std::size_t cap = catalog.capacity_for(kinds[vertex], kind);
      if (count > cap) {
        violations.push_back(CapacityViolation{vertex, kind, cap, count});
      }
    }
  }
  return violations;
}

NestingOp make_nesting_op(std::vector<KindWord> inputs, std::vector<ParentEdge> parent_edges,
                          const Catalog& catalog) {
  NestingOp op{std::move(inputs), sorted_edges(std::move(parent_edges))};
  validate_nesting_op(op, catalog);
  return op;
}

void validate_nesting_op(const NestingOp& op, const Catalog& catalog) {
  for (const KindWord& w : op.inputs) {
    for (const std::string& kind : w) catalog.at(kind);
  }
  validate_forest(op.output_size(), op.parent_edges);
  require_capacity(op.output_word(), op.parent_edges, catalog);
}

NestedFleet make_nested_fleet(std::vector<LocatedAgent> agents,
                              std::vector<ParentEdge> parent, const Catalog& catalog) {
  NestedFleet fleet{std::move(agents), sorted_edges(std::move(parent))};
  validate_nested_fleet(fleet, catalog);
  return fleet;
}

void validate_nested_fleet(const NestedFleet& fleet, const Catalog& catalog) {
  for (const LocatedAgent& a : fleet.agents) catalog.at(a.kind);
  validate_forest(fleet.size(), fleet.parent);
  require_capacity(fleet.kind_word(), fleet.parent, catalog);
  for (const ParentEdge& e : fleet.parent) {
    const std::size_t root = nesting_root(e.second, fleet.parent);
    if (!(fleet.agents[e.first].pos == fleet.agents[root].pos)) {
      throw Error(ErrorCode::BadPosition, "carried agent not at its root carrier's position",
                  {{"agent", e.first}, {"root", root}});
    }
  }
}

NestingOp identity_nesting(KindWord word, const Catalog& catalog) {
  for (const std::string& kind : word) catalog.at(kind);
  return NestingOp{{std::move(word)}, {}};
}

namespace {

// Shared by compose_nesting and act_nesting: checks slot words, shifts
// the parts' edges, and re-validates the combined relation.
std::vector<ParentEdge> combine_edges(const NestingOp& outer,
                                      const std::vector<KindWord>& part_words,
                                      const std::vector<const std::vector<ParentEdge>*>& part_edges,
                                      const KindWord& combined_kinds, const Catalog& catalog) {
  if (part_words.size() != outer.slot_count()) {
    throw Error(ErrorCode::ArityMismatch, "wrong number of arguments for nesting composition",
                {{"expected", outer.slot_count()}, {"actual", part_words.size()}});
  }
  std::vector<ParentEdge> edges = outer.parent_edges;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < part_words.size(); ++i) {
    if (part_words[i] != outer.inputs[i]) {
      throw Error(ErrorCode::ColorMismatch, "argument colors do not match slot word",
                  {{"slot", i}, {"expected", outer.inputs[i]}, {"actual", part_words[i]}});
    }
    for (const ParentEdge& e : *part_edges[i]) {
      edges.emplace_back(e.first + offset, e.second + offset);
    }
    offset += outer.inputs[i].size();
  }
  std::sort(edges.begin(), edges.end());
  validate_forest(combined_kinds.size(), edges);
  require_capacity(combined_kinds, edges, catalog);
  return edges;
}

}  // namespace

NestingOp compose_nesting(const NestingOp& outer, const std::vector<NestingOp>& parts,
                          const Catalog& catalog) {
  std::vector<KindWord> part_words;
  std::vector<const std::vector<ParentEdge>*> part_edges;
  std::vector<KindWord> inputs;
  part_words.reserve(parts.size());
  for (const NestingOp& part : parts) {
    part_words.push_back(part.output_word());
    part_edges.push_back(&part.parent_edges);
    inputs.insert(inputs.end(), part.inputs.begin(), part.inputs.end());
  }
  KindWord combined;
  for (const KindWord& w : part_words) combined.insert(combined.end(), w.begin(), w.end());
  std::vector<ParentEdge> edges =
      combine_edges(outer, part_words, part_edges, combined, catalog);
  return NestingOp{std::move(inputs), std::move(edges)};
}

NestedFleet act_nesting(const NestingOp& op, const std::vector<NestedFleet>& parts,
                        const Catalog& catalog) {
  std::vector<KindWord> part_words;
  std::vector<const std::vector<ParentEdge>*> part_edges;
  std::vector<LocatedAgent> agents;
  part_words.reserve(parts.size());
  for (const NestedFleet& part : parts) {
    part_words.push_back(part.kind_word());
    part_edges.push_back(&part.parent);
    agents.insert(agents.end(), part.agents.begin(), part.agents.end());
  }
  KindWord combined;
  for (const KindWord& w : part_words) combined.insert(combined.end(), w.begin(), w.end());
  std::vector<ParentEdge> edges = combine_edges(op, part_words, part_edges, combined, catalog);
  // Carried assets travel with their carrier: every vertex takes the
  // position of its root in the combined forest.
  for (std::size_t v = 0; v < agents.size(); ++v) {
    agents[v].pos = agents[nesting_root(v, edges)].pos;
  }
  return NestedFleet{std::move(agents), std::move(edges)};
}

std::size_t nesting_root(std::size_t v, const std::vector<ParentEdge>& parent) {
  for (;;) {
    const auto it = std::lower_bound(parent.begin(), parent.end(), v,
                                     [](const ParentEdge& e, std::size_t child) {
                                       return e.first < child;
                                     });
    if (it == parent.end() || it->first != v) return v;
    v = it->second;
  }
}

}  // namespace netop
