#include "netop/graph_op.hpp"

#include <algorithm>
#include <numeric>

#include "netop/error.hpp"

namespace netop {

namespace {

nlohmann::json edge_json(const Edge& e) {
  return nlohmann::json::array({e.first, e.second});
}

// Sorts and dedups an edge list that is already normalized and in range.
// Used by the combining operations, whose inputs are canonical already.
std::vector<Edge> canonical_union(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

std::size_t GraphOp::output_size() const {
  return std::accumulate(inputs.begin(), inputs.end(), std::size_t{0});
}

std::size_t GraphOp::slot_offset(std::size_t slot) const {
  return std::accumulate(inputs.begin(), inputs.begin() + slot, std::size_t{0});
}

GraphOp make_graph_op(std::vector<std::size_t> inputs, std::vector<Edge> edges) {
  const std::size_t total = std::accumulate(inputs.begin(), inputs.end(), std::size_t{0});
  for (Edge& e : edges) {
    if (e.first == e.second) {
      throw Error(ErrorCode::SelfLoop, "edge is a self-loop", {{"edge", edge_json(e)}});
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.second >= total) {
      throw Error(ErrorCode::IndexOutOfRange, "edge endpoint exceeds vertex count",
                  {{"edge", edge_json(e)}, {"vertex_count", total}});
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge", {{"edge", edge_json(*dup)}});
  }
  return GraphOp{std::move(inputs), std::move(edges)};
}

void validate_graph_op(const GraphOp& op) {
  const std::size_t total = op.output_size();
  for (const Edge& e : op.edges) {
    if (e.first == e.second) {
      throw Error(ErrorCode::SelfLoop, "edge is a self-loop", {{"edge", edge_json(e)}});
    }
    if (e.first > e.second) {
      throw Error(ErrorCode::InvalidArgument, "edge not normalized to (min,max)",
                  {{"edge", edge_json(e)}});
    }
    if (e.second >= total) {
      throw Error(ErrorCode::IndexOutOfRange, "edge endpoint exceeds vertex count",
                  {{"edge", edge_json(e)}, {"vertex_count", total}});
    }
  }
  if (!std::is_sorted(op.edges.begin(), op.edges.end())) {
    throw Error(ErrorCode::InvalidArgument, "edge set not sorted");
  }
  if (std::adjacent_find(op.edges.begin(), op.edges.end()) != op.edges.end()) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge",
                {{"edge", edge_json(*std::adjacent_find(op.edges.begin(), op.edges.end()))}});
  }
}

GraphOp identity_op(std::size_t n) { return GraphOp{{n}, {}}; }

GraphOp compose(const GraphOp& outer, const std::vector<GraphOp>& parts) {
  if (parts.size() != outer.slot_count()) {
    throw Error(ErrorCode::ArityMismatch, "wrong number of arguments for composition",
                {{"expected", outer.slot_count()}, {"actual", parts.size()}});
  }
  std::vector<std::size_t> inputs;
  std::vector<Edge> edges = outer.edges;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const GraphOp& part = parts[i];
    if (part.output_size() != outer.inputs[i]) {
      throw Error(ErrorCode::SlotTypeMismatch, "argument type does not match slot",
                  {{"slot", i}, {"expected", outer.inputs[i]}, {"actual", part.output_size()}});
    }
    inputs.insert(inputs.end(), part.inputs.begin(), part.inputs.end());
    for (const Edge& e : part.edges) {
      edges.emplace_back(e.first + offset, e.second + offset);
    }
    offset += outer.inputs[i];
  }
  return GraphOp{std::move(inputs), canonical_union(std::move(edges))};
}

SlotPermutation make_slot_permutation(std::vector<std::size_t> order) {
  std::vector<bool> seen(order.size(), false);
  for (std::size_t slot : order) {
    if (slot >= order.size() || seen[slot]) {
      throw Error(ErrorCode::BadPermutation, "not a permutation of 0..k-1",
                  {{"order", order}});
    }
    seen[slot] = true;
  }
  return SlotPermutation{std::move(order)};
}

std::vector<VertexId> block_vertex_map(const std::vector<std::size_t>& inputs,
                                       const SlotPermutation& sigma) {
  std::vector<std::size_t> old_offsets(inputs.size() + 1, 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    old_offsets[i + 1] = old_offsets[i] + inputs[i];
  }
  std::vector<VertexId> map(old_offsets.back());
  std::size_t new_offset = 0;
  for (std::size_t pos = 0; pos < sigma.order.size(); ++pos) {
    const std::size_t old_slot = sigma.order[pos];
    for (std::size_t t = 0; t < inputs[old_slot]; ++t) {
      map[old_offsets[old_slot] + t] = new_offset + t;
    }
    new_offset += inputs[old_slot];
  }
  return map;
}

GraphOp permute_inputs(const GraphOp& op, const SlotPermutation& sigma) {
  if (sigma.size() != op.slot_count()) {
    throw Error(ErrorCode::BadPermutation, "permutation size does not match slot count",
                {{"expected", op.slot_count()}, {"actual", sigma.size()}});
  }
  const std::vector<VertexId> map = block_vertex_map(op.inputs, sigma);
  std::vector<std::size_t> inputs(op.slot_count());
  for (std::size_t pos = 0; pos < sigma.order.size(); ++pos) {
    inputs[pos] = op.inputs[sigma.order[pos]];
  }
  std::vector<Edge> edges;
  edges.reserve(op.edges.size());
  for (const Edge& e : op.edges) {
    const VertexId u = map[e.first];
    const VertexId v = map[e.second];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return GraphOp{std::move(inputs), canonical_union(std::move(edges))};
}

GraphOp overlay(const GraphOp& a, const GraphOp& b) {
  if (a.inputs != b.inputs) {
    throw Error(ErrorCode::ShapeMismatch, "overlay requires identical input shapes",
                {{"left", a.inputs}, {"right", b.inputs}});
  }
  std::vector<Edge> edges = a.edges;
  edges.insert(edges.end(), b.edges.begin(), b.edges.end());
  return GraphOp{a.inputs, canonical_union(std::move(edges))};
}

}  // namespace netop
