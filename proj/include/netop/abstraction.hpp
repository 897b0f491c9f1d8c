#pragma once

#include <cstddef>
#include <vector>

#include "netop/fleet.hpp"
#include "netop/graph_op.hpp"
#include "netop/nesting.hpp"

namespace netop {

// Most abstract description of a network: anonymous vertices and links,
// no kinds, no positions.
struct CountFleet {
  std::size_t size = 0;
  std::vector<Edge> links;  // normalized, sorted, unique

  friend bool operator==(const CountFleet&, const CountFleet&) = default;
};

CountFleet make_count_fleet(std::size_t size, std::vector<Edge> links);

// Operad homomorphism from the nesting operad: slot words become vertex
// counts, directed carrier edges become undirected edges.
GraphOp forget_colors(const NestingOp& op);

// Algebra map that forgets where agents are and what they are.
CountFleet forget_positions(const LocatedFleet& fleet);

// Action on abstract networks: concatenate and add every blueprint edge
// unconditionally (no range filter).
CountFleet act_abstract(const GraphOp& op, const std::vector<CountFleet>& parts);

// Defect of the lax square: the links present after acting abstractly on
// the forgotten inputs but absent from the forgotten concrete output.
// Equals exactly the blueprint edges whose endpoint agents are out of
// range; an empty list means the square commutes on this input.
std::vector<Edge> check_square(const GraphOp& op, const std::vector<LocatedFleet>& parts,
                               const Catalog& catalog);

}  // namespace netop
