#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace netop {

// One kind of asset.  carry_capacity maps a cargo kind name to the
// maximum number of direct children of that kind; an absent entry means
// the kind cannot be carried at all.
struct AgentKind {
  std::string name;
  double comm_range = 0;
  double speed = 0;
  double unit_cost = 0;
  double search_rate = 0;
  std::map<std::string, std::size_t> carry_capacity;

  friend bool operator==(const AgentKind&, const AgentKind&) = default;
};

// Kind registry shared by fleets, nestings, and design search.  Kinds are
// kept sorted by name so every enumeration over the catalog is
// deterministic.
class Catalog {
 public:
  Catalog() = default;

  // Validates: unique names, all numeric fields finite and non-negative.
  explicit Catalog(std::vector<AgentKind> kinds);

  const std::vector<AgentKind>& kinds() const { return kinds_; }
  bool contains(const std::string& name) const;

  // Throws UnknownKind.
  const AgentKind& at(const std::string& name) const;

  // How many direct children of kind `cargo` may `carrier` hold; absent
  // capacity entries count as zero.
  std::size_t capacity_for(const std::string& carrier, const std::string& cargo) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<AgentKind> kinds_;
};

}  // namespace netop
