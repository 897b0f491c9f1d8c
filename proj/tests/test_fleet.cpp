#include "netop/fleet.hpp"

#include <doctest.h>

#include "netop/error.hpp"
#include "netop/laws.hpp"

using namespace netop;

namespace {

Catalog plane_catalog() {
  return Catalog{{AgentKind{"plane", 5.0, 100.0, 50.0, 1.0, {}}}};
}

}  // namespace

TEST_CASE("in_range uses the smaller range, boundary inclusive") {
  Catalog cat{{AgentKind{"short", 5.0, 0, 0, 0, {}}, AgentKind{"long", 9.0, 0, 0, 0, {}}}};
  LocatedAgent a{"short", {0, 0}};

  CHECK(in_range(a, {"short", {3, 4}}, cat));        // dist 5 == range 5
  CHECK_FALSE(in_range(a, {"short", {10, 0}}, cat)); // dist 10
  CHECK(in_range(a, {"short", {0, 0}}, cat));        // coincident
  // min of the two ranges governs: dist 6 > min(5, 9)
  CHECK_FALSE(in_range(a, {"long", {6, 0}}, cat));
  CHECK(in_range({"long", {0, 0}}, {"long", {6, 0}}, cat));
}

TEST_CASE("make_fleet validates links against the range predicate") {
  Catalog cat = plane_catalog();

  LocatedFleet ok = make_fleet({{"plane", {0, 0}}, {"plane", {0, 3}}}, {{1, 0}}, cat);
  CHECK(ok.links == std::vector<Edge>{{0, 1}});

  LocatedFleet empty = make_fleet({}, {}, cat);
  CHECK(empty.size() == 0);

  try {
    make_fleet({{"plane", {0, 0}}, {"plane", {10, 0}}}, {{0, 1}}, cat);
    FAIL("out-of-range link not rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LinkOutOfRange);
    CHECK(e.context()["distance"] == 10.0);
    CHECK(e.context()["max_range"] == 5.0);
  }

  CHECK_THROWS_AS(make_fleet({{"boat", {0, 0}}}, {}, cat), Error);
  CHECK_THROWS_AS(make_fleet({{"plane", {0, 0}}, {"plane", {0, 1}}}, {{0, 1}, {1, 0}}, cat),
                  Error);
}

TEST_CASE("act keeps input links and filters blueprint edges by range") {
  Catalog cat = plane_catalog();
  GraphOp f = make_graph_op({2, 2}, {{0, 2}, {1, 3}});

  // Worked example: {0,2} lands exactly on the range boundary and is
  // kept; {1,3} is out of range and silently dropped.
  LocatedFleet x1 = make_fleet({{"plane", {0, 0}}, {"plane", {0, 3}}}, {{0, 1}}, cat);
  LocatedFleet x2 = make_fleet({{"plane", {3, 4}}, {"plane", {6, 4}}}, {{0, 1}}, cat);

  LocatedFleet out = act(f, {x1, x2}, cat);
  CHECK(out.size() == 4);
  CHECK(out.links == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
  validate_fleet(out, cat);

  SUBCASE("unit action") {
    CHECK(act(identity_op(2), {x1}, cat) == x1);
  }

  SUBCASE("edgeless blueprint only concatenates") {
    LocatedFleet cat2 = act(make_graph_op({2, 2}, {}), {x1, x2}, cat);
    CHECK(cat2.size() == 4);
    CHECK(cat2.links == std::vector<Edge>{{0, 1}, {2, 3}});
  }

  SUBCASE("mismatches report the slot") {
    try {
      act(f, {x1, make_fleet({{"plane", {0, 0}}}, {}, cat)}, cat);
      FAIL("slot mismatch not rejected");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SlotTypeMismatch);
      CHECK(e.context()["slot"] == 1);
    }
    CHECK_THROWS_AS(act(f, {x1}, cat), Error);
  }

  SUBCASE("blueprint edge duplicating an existing link is merged") {
    GraphOp inner = make_graph_op({2}, {{0, 1}});
    LocatedFleet merged = act(inner, {x1}, cat);
    CHECK(merged.links == std::vector<Edge>{{0, 1}});
  }
}

TEST_CASE("randomized algebra laws") {
  laws::SuiteResult r = laws::algebra_laws(11, 200);
  CHECK(r.failed == 0);
  CHECK(r.passed == 200);
}
