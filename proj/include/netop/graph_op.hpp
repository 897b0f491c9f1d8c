#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace netop {

using VertexId = std::size_t;

// Undirected edge, always stored as (min, max).
using Edge = std::pair<VertexId, VertexId>;

// A blueprint for combining k input networks into one.  Slot i stands for
// any network with inputs[i] vertices; vertices are numbered block by
// block in slot order, and `edges` are the links the blueprint adds over
// the concatenated vertex set.  The output type is the total vertex
// count and is never stored separately.
//
// Instances built through the constructors below are canonical: edges
// normalized to (min, max), sorted lexicographically, duplicate-free.
// Structural equality is therefore decidable equality.
struct GraphOp {
  std::vector<std::size_t> inputs;
  std::vector<Edge> edges;

  std::size_t slot_count() const { return inputs.size(); }
  std::size_t output_size() const;

  // Global index of the first vertex of a slot's block.
  std::size_t slot_offset(std::size_t slot) const;

  friend bool operator==(const GraphOp&, const GraphOp&) = default;
};

// Reordering of slots: order[i] names the old slot that moves to
// position i.  Must contain each of 0..k-1 exactly once.
struct SlotPermutation {
  std::vector<std::size_t> order;

  std::size_t size() const { return order.size(); }

  friend bool operator==(const SlotPermutation&, const SlotPermutation&) = default;
};

// Validating constructor.  Normalizes every pair to (min, max) and sorts
// the edge set.  Rejects self-loops, indices outside the vertex range,
// and duplicate pairs, naming the offending edge in each diagnostic.
GraphOp make_graph_op(std::vector<std::size_t> inputs, std::vector<Edge> edges);

// Re-runs the constructor checks on an arbitrary value; throws on any
// invariant violation (also catches non-canonical edge storage).
void validate_graph_op(const GraphOp& op);

// One slot of n vertices, no edges: the operad unit at type n.
GraphOp identity_op(std::size_t n);

// Operadic grafting: substitute parts[i] into slot i of outer.  Requires
// parts[i].output_size() == outer.inputs[i]; the result concatenates the
// parts' slots and takes the union of all edge sets (the parts' edges
// shifted by their slot's block offset, outer's unchanged).
GraphOp compose(const GraphOp& outer, const std::vector<GraphOp>& parts);

SlotPermutation make_slot_permutation(std::vector<std::size_t> order);

// The vertex relabeling induced by permuting blocks of sizes `inputs` by
// sigma: result[old_index] == new_index.
std::vector<VertexId> block_vertex_map(const std::vector<std::size_t>& inputs,
                                       const SlotPermutation& sigma);

// Reorders slots by sigma and relabels every edge through the induced
// block permutation.  Output type is unchanged.
GraphOp permute_inputs(const GraphOp& op, const SlotPermutation& sigma);

// Edge-set union of two blueprints over the same slot shape.
GraphOp overlay(const GraphOp& a, const GraphOp& b);

}  // namespace netop
