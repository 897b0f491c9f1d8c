#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "netop/catalog.hpp"
#include "netop/fleet.hpp"

namespace netop {

// A word of kind names, one per vertex: the typed arity of a slot and
// the output color of an operation.
using KindWord = std::vector<std::string>;

// Directed nesting edge (child, parent): the child rides inside the
// parent.
using ParentEdge = std::pair<std::size_t, std::size_t>;

struct CapacityViolation {
  std::size_t vertex = 0;
  std::string kind;       // cargo kind exceeding the cap
  std::size_t cap = 0;
  std::size_t actual = 0;

  friend bool operator==(const CapacityViolation&, const CapacityViolation&) = default;
};

// Colored-operad operation: each slot carries a word of kinds, and the
// operation nests some of the combined vertices inside others.  The
// parent relation over all vertices must be a forest and respect every
// carrier's per-kind capacity.
struct NestingOp {
  std::vector<KindWord> inputs;
  std::vector<ParentEdge> parent_edges;  // sorted by (child, parent), unique children

  std::size_t slot_count() const { return inputs.size(); }
  std::size_t output_size() const;
  KindWord output_word() const;  // concatenation of the slot words
  std::size_t slot_offset(std::size_t slot) const;

  friend bool operator==(const NestingOp&, const NestingOp&) = default;
};

// Algebra element for nesting: located agents plus who is carried by
// whom.  Carried agents sit at their root carrier's position.
struct NestedFleet {
  std::vector<LocatedAgent> agents;
  std::vector<ParentEdge> parent;  // sorted by child, unique children

  std::size_t size() const { return agents.size(); }
  KindWord kind_word() const;

  friend bool operator==(const NestedFleet&, const NestedFleet&) = default;
};

// Per-kind capacity audit of a typed forest.  Empty result means every
// carrier is within its caps; otherwise one entry per (vertex, kind)
// over the limit.
std::vector<CapacityViolation> check_capacity(const KindWord& kinds,
                                              const std::vector<ParentEdge>& parent,
                                              const Catalog& catalog);

// Validating constructors.
NestingOp make_nesting_op(std::vector<KindWord> inputs, std::vector<ParentEdge> parent_edges,
                          const Catalog& catalog);
NestedFleet make_nested_fleet(std::vector<LocatedAgent> agents,
                              std::vector<ParentEdge> parent, const Catalog& catalog);

void validate_nesting_op(const NestingOp& op, const Catalog& catalog);
void validate_nested_fleet(const NestedFleet& fleet, const Catalog& catalog);

// Identity operation on a word of kinds.
NestingOp identity_nesting(KindWord word, const Catalog& catalog);

// Grafting for nesting operations.  Slot words of `outer` must equal the
// parts' output words positionally; the combined parent relation is
// re-validated, so a composition that would give a vertex two parents,
// close a cycle, or push a carrier over capacity is rejected rather than
// repaired.
NestingOp compose_nesting(const NestingOp& outer, const std::vector<NestingOp>& parts,
                          const Catalog& catalog);

// Action on nested fleets: concatenates agents, unions the parent
// relations, and moves every newly nested subtree to its root carrier's
// position.  Fails exactly when compose_nesting would.
NestedFleet act_nesting(const NestingOp& op, const std::vector<NestedFleet>& parts,
                        const Catalog& catalog);

// Root of v's carrier tree (v itself when it is not carried).
std::size_t nesting_root(std::size_t v, const std::vector<ParentEdge>& parent);

}  // namespace netop
