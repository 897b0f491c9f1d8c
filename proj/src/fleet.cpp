#include "netop/fleet.hpp"

#include <algorithm>
#include <cmath>

#include "netop/error.hpp"

namespace netop {

double squared_distance(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(const Vec2& a, const Vec2& b) { return std::sqrt(squared_distance(a, b)); }

bool in_range(const LocatedAgent& a, const LocatedAgent& b, const Catalog& catalog) {
  const double reach = std::min(catalog.at(a.kind).comm_range, catalog.at(b.kind).comm_range);
  return squared_distance(a.pos, b.pos) <= reach * reach;
}

LocatedFleet make_fleet(std::vector<LocatedAgent> agents, std::vector<Edge> links,
                        const Catalog& catalog) {
  LocatedFleet fleet{std::move(agents), std::move(links)};
  for (Edge& e : fleet.links) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(fleet.links.begin(), fleet.links.end());
  validate_fleet(fleet, catalog);
  return fleet;
}

void validate_fleet(const LocatedFleet& fleet, const Catalog& catalog) {
  for (const LocatedAgent& agent : fleet.agents) {
    catalog.at(agent.kind);  // throws UnknownKind
  }
  const std::size_t n = fleet.size();
  for (const Edge& e : fleet.links) {
    const nlohmann::json link = nlohmann::json::array({e.first, e.second});
    if (e.first == e.second) {
      throw Error(ErrorCode::SelfLoop, "link is a self-loop", {{"link", link}});
    }
    if (e.first > e.second) {
      throw Error(ErrorCode::InvalidArgument, "link not normalized to (min,max)",
                  {{"link", link}});
    }
    if (e.second >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "link endpoint exceeds agent count",
                  {{"link", link}, {"agent_count", n}});
    }
    const LocatedAgent& a = fleet.agents[e.first];
    const LocatedAgent& b = fleet.agents[e.second];
    if (!in_range(a, b, catalog)) {
      const double reach =
          std::min(catalog.at(a.kind).comm_range, catalog.at(b.kind).comm_range);
      throw Error(ErrorCode::LinkOutOfRange, "linked agents are out of range",
                  {{"link", link},
                   {"distance", distance(a.pos, b.pos)},
                   {"max_range", reach}});
    }
  }
  if (!std::is_sorted(fleet.links.begin(), fleet.links.end())) {
    throw Error(ErrorCode::InvalidArgument, "link set not sorted");
  }
  const auto dup = std::adjacent_find(fleet.links.begin(), fleet.links.end());
  if (dup != fleet.links.end()) {
    throw Error(ErrorCode::DuplicateLink, "duplicate link",
                {{"link", nlohmann::json::array({dup->first, dup->second})}});
  }
}

LocatedFleet act(const GraphOp& op, const std::vector<LocatedFleet>& parts,
                 const Catalog& catalog) {
  if (parts.size() != op.slot_count()) {
    throw Error(ErrorCode::ArityMismatch, "wrong number of fleets for blueprint",
                {{"expected", op.slot_count()}, {"actual", parts.size()}});
  }
  LocatedFleet out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const LocatedFleet& part = parts[i];
    if (part.size() != op.inputs[i]) {
      throw Error(ErrorCode::SlotTypeMismatch, "fleet size does not match slot type",
                  {{"slot", i}, {"expected", op.inputs[i]}, {"actual", part.size()}});
    }
    out.agents.insert(out.agents.end(), part.agents.begin(), part.agents.end());
    for (const Edge& e : part.links) {
      out.links.emplace_back(e.first + offset, e.second + offset);
    }
    offset += op.inputs[i];
  }
  for (const Edge& e : op.edges) {
    if (in_range(out.agents[e.first], out.agents[e.second], catalog)) {
      out.links.push_back(e);
    }
  }
  std::sort(out.links.begin(), out.links.end());
  out.links.erase(std::unique(out.links.begin(), out.links.end()), out.links.end());
  return out;
}

}  // namespace netop
