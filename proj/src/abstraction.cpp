#include "netop/abstraction.hpp"

#include <algorithm>

#include "netop/error.hpp"

namespace netop {

CountFleet make_count_fleet(std::size_t size, std::vector<Edge> links) {
  // Reuse the simple-graph checks: an abstract network is a GraphOp with
  // a single block.
  GraphOp checked = make_graph_op({size}, std::move(links));
  return CountFleet{size, std::move(checked.edges)};
}

GraphOp forget_colors(const NestingOp& op) {
  std::vector<std::size_t> inputs;
  inputs.reserve(op.slot_count());
  for (const KindWord& w : op.inputs) inputs.push_back(w.size());
  std::vector<Edge> edges;
  edges.reserve(op.parent_edges.size());
  for (const ParentEdge& e : op.parent_edges) {
    edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return GraphOp{std::move(inputs), std::move(edges)};
}

CountFleet forget_positions(const LocatedFleet& fleet) {
  return CountFleet{fleet.size(), fleet.links};
}

CountFleet act_abstract(const GraphOp& op, const std::vector<CountFleet>& parts) {
  if (parts.size() != op.slot_count()) {
    throw Error(ErrorCode::ArityMismatch, "wrong number of networks for blueprint",
                {{"expected", op.slot_count()}, {"actual", parts.size()}});
  }
  CountFleet out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size != op.inputs[i]) {
      throw Error(ErrorCode::SlotTypeMismatch, "network size does not match slot type",
                  {{"slot", i}, {"expected", op.inputs[i]}, {"actual", parts[i].size}});
    }
    for (const Edge& e : parts[i].links) {
      out.links.emplace_back(e.first + offset, e.second + offset);
    }
    offset += op.inputs[i];
  }
  out.size = offset;
  out.links.insert(out.links.end(), op.edges.begin(), op.edges.end());
  std::sort(out.links.begin(), out.links.end());
  out.links.erase(std::unique(out.links.begin(), out.links.end()), out.links.end());
  return out;
}

std::vector<Edge> check_square(const GraphOp& op, const std::vector<LocatedFleet>& parts,
                               const Catalog& catalog) {
  const CountFleet concrete = forget_positions(act(op, parts, catalog));
  std::vector<CountFleet> abstract_parts;
  abstract_parts.reserve(parts.size());
  for (const LocatedFleet& part : parts) abstract_parts.push_back(forget_positions(part));
  const CountFleet abstract = act_abstract(op, abstract_parts);

  std::vector<Edge> missing;
  std::set_difference(abstract.links.begin(), abstract.links.end(), concrete.links.begin(),
                      concrete.links.end(), std::back_inserter(missing));
  return missing;
}

}  // namespace netop
