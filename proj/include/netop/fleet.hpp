#pragma once

#include <string>
#include <vector>

#include "netop/catalog.hpp"
#include "netop/graph_op.hpp"

namespace netop {

struct Vec2 {
  double x = 0;
  double y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double squared_distance(const Vec2& a, const Vec2& b);
double distance(const Vec2& a, const Vec2& b);

struct LocatedAgent {
  std::string kind;
  Vec2 pos;

  friend bool operator==(const LocatedAgent&, const LocatedAgent&) = default;
};

// An algebra element: located agents plus the links already established
// between them.  Every link must satisfy the range predicate; the
// element's operad type is the agent count.
struct LocatedFleet {
  std::vector<LocatedAgent> agents;
  std::vector<Edge> links;  // normalized (min,max), sorted, unique

  std::size_t size() const { return agents.size(); }

  friend bool operator==(const LocatedFleet&, const LocatedFleet&) = default;
};

// Both radios must reach: true iff the Euclidean distance is at most the
// smaller of the two comm ranges, boundary inclusive.  Compares squared
// quantities, so integer-valued coordinates are decided exactly.
bool in_range(const LocatedAgent& a, const LocatedAgent& b, const Catalog& catalog);

// Validating constructor; rejects unknown kinds, malformed or duplicate
// links, and links whose endpoints are out of range of each other.
LocatedFleet make_fleet(std::vector<LocatedAgent> agents, std::vector<Edge> links,
                        const Catalog& catalog);

void validate_fleet(const LocatedFleet& fleet, const Catalog& catalog);

// The range-limited action: concatenates the input fleets (positions
// unchanged), keeps all their links, and instantiates a blueprint edge
// as a real link only when its endpoints are in range.  Out-of-range
// blueprint edges are dropped silently.
LocatedFleet act(const GraphOp& op, const std::vector<LocatedFleet>& parts,
                 const Catalog& catalog);

}  // namespace netop
