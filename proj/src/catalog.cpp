#include "netop/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "netop/error.hpp"

namespace netop {

namespace {

void require_finite_nonnegative(const std::string& kind, const char* field, double value) {
  if (!std::isfinite(value) || value < 0) {
    throw Error(ErrorCode::InvalidArgument, "kind field must be finite and non-negative",
                {{"kind", kind}, {"field", field}, {"value", value}});
  }
}

}  // namespace

Catalog::Catalog(std::vector<AgentKind> kinds) : kinds_(std::move(kinds)) {
  std::sort(kinds_.begin(), kinds_.end(),
            [](const AgentKind& a, const AgentKind& b) { return a.name < b.name; });
  for (std::size_t i = 0; i + 1 < kinds_.size(); ++i) {
    if (kinds_[i].name == kinds_[i + 1].name) {
      throw Error(ErrorCode::InvalidArgument, "duplicate kind name",
                  {{"kind", kinds_[i].name}});
    }
  }
  for (const AgentKind& k : kinds_) {
    require_finite_nonnegative(k.name, "comm_range", k.comm_range);
    require_finite_nonnegative(k.name, "speed", k.speed);
    require_finite_nonnegative(k.name, "unit_cost", k.unit_cost);
    require_finite_nonnegative(k.name, "search_rate", k.search_rate);
  }
}

bool Catalog::contains(const std::string& name) const {
  const auto it = std::lower_bound(
      kinds_.begin(), kinds_.end(), name,
      [](const AgentKind& k, const std::string& n) { return k.name < n; });
  return it != kinds_.end() && it->name == name;
}

const AgentKind& Catalog::at(const std::string& name) const {
  const auto it = std::lower_bound(
      kinds_.begin(), kinds_.end(), name,
      [](const AgentKind& k, const std::string& n) { return k.name < n; });
  if (it == kinds_.end() || it->name != name) {
    throw Error(ErrorCode::UnknownKind, "kind not in catalog", {{"kind", name}});
  }
  return *it;
}

std::size_t Catalog::capacity_for(const std::string& carrier, const std::string& cargo) const {
  const AgentKind& k = at(carrier);
  const auto it = k.carry_capacity.find(cargo);
  return it == k.carry_capacity.end() ? 0 : it->second;
}

}  // namespace netop
