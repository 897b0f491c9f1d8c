#include "netop/nesting.hpp"

#include <doctest.h>

#include "netop/error.hpp"
#include "netop/laws.hpp"

using namespace netop;

namespace {

Catalog sar_catalog() {
  return Catalog{{
      AgentKind{"heli", 10.0, 100.0, 60.0, 1.0, {{"quad", 2}}},
      AgentKind{"quad", 2.0, 0.0, 10.0, 2.0, {}},
      AgentKind{"ship", 20.0, 15.0, 150.0, 0.5, {{"heli", 1}, {"quad", 4}}},
  }};
}

}  // namespace

TEST_CASE("check_capacity counts direct children per kind") {
  Catalog cat = sar_catalog();
  KindWord kinds{"heli", "quad", "quad"};

  CHECK(check_capacity(kinds, {{1, 0}, {2, 0}}, cat).empty());

  KindWord over{"heli", "quad", "quad", "quad"};
  auto violations = check_capacity(over, {{1, 0}, {2, 0}, {3, 0}}, cat);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == CapacityViolation{0, "quad", 2, 3});

  // absent capacity entry means "cannot carry"
  auto none = check_capacity({"quad", "heli"}, {{1, 0}}, cat);
  REQUIRE(none.size() == 1);
  CHECK(none[0] == CapacityViolation{0, "heli", 0, 1});
}

TEST_CASE("make_nesting_op enforces forest and capacity invariants") {
  Catalog cat = sar_catalog();

  NestingOp load = make_nesting_op({{"heli"}, {"quad"}, {"quad"}}, {{1, 0}, {2, 0}}, cat);
  CHECK(load.output_size() == 3);
  CHECK(load.output_word() == KindWord{"heli", "quad", "quad"});

  try {
    make_nesting_op({{"heli"}, {"quad"}}, {{1, 0}, {1, 0}}, cat);
    FAIL("duplicate edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }

  try {
    make_nesting_op({{"ship"}, {"heli"}, {"heli"}}, {{1, 0}, {2, 0}}, cat);
    FAIL("over-capacity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapacityExceeded);
    CHECK(e.context()["vertex"] == 0);
    CHECK(e.context()["kind"] == "heli");
    CHECK(e.context()["cap"] == 1);
    CHECK(e.context()["actual"] == 2);
  }

  CHECK_THROWS_AS(make_nesting_op({{"heli"}}, {{0, 0}}, cat), Error);
  CHECK_THROWS_AS(make_nesting_op({{"whale"}}, {}, cat), Error);
}

TEST_CASE("compose_nesting re-validates the combined relation") {
  Catalog cat = sar_catalog();

  SUBCASE("identities are units") {
    NestingOp load = make_nesting_op({{"heli"}, {"quad"}, {"quad"}}, {{1, 0}, {2, 0}}, cat);
    NestingOp lhs = compose_nesting(identity_nesting(load.output_word(), cat), {load}, cat);
    CHECK(lhs == load);
    NestingOp rhs = compose_nesting(
        load,
        {identity_nesting({"heli"}, cat), identity_nesting({"quad"}, cat),
         identity_nesting({"quad"}, cat)},
        cat);
    CHECK(rhs == load);
  }

  SUBCASE("capacity accounts for children contributed by both layers") {
    // part already fills the heli with 2 quads; outer adds a third
    NestingOp part = make_nesting_op({{"heli"}, {"quad"}, {"quad"}}, {{1, 0}, {2, 0}}, cat);
    NestingOp outer =
        make_nesting_op({{"heli", "quad", "quad"}, {"quad"}}, {{3, 0}}, cat);
    try {
      compose_nesting(outer, {part, identity_nesting({"quad"}, cat)}, cat);
      FAIL("over-capacity composite accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CapacityExceeded);
      CHECK(e.context()["cap"] == 2);
      CHECK(e.context()["actual"] == 3);
    }
  }

  SUBCASE("vertex acquiring two parents is rejected") {
    NestingOp part = make_nesting_op({{"ship"}, {"quad"}}, {{1, 0}}, cat);
    NestingOp outer = make_nesting_op({{"ship", "quad"}, {"heli"}}, {{1, 2}}, cat);
    try {
      compose_nesting(outer, {part, identity_nesting({"heli"}, cat)}, cat);
      FAIL("double parent accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DoubleParent);
      CHECK(e.context()["vertex"] == 1);
    }
  }

  SUBCASE("cycle closed across layers is rejected") {
    // part: heli #1 carried by ship #0; outer: ship #0 carried by heli #1
    Catalog wide{{
        AgentKind{"ship", 20, 15, 150, 0.5, {{"heli", 1}}},
        AgentKind{"heli", 10, 100, 60, 1, {{"ship", 1}}},
    }};
    NestingOp outer = make_nesting_op({{"ship", "heli"}}, {{0, 1}}, wide);
    NestingOp part = make_nesting_op({{"ship"}, {"heli"}}, {{1, 0}}, wide);
    try {
      compose_nesting(outer, {part}, wide);
      FAIL("cycle accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NestingCycle);
    }
  }

  SUBCASE("color mismatch reports the slot") {
    NestingOp outer = make_nesting_op({{"heli"}, {"quad"}}, {{1, 0}}, cat);
    try {
      compose_nesting(outer, {identity_nesting({"heli"}, cat), identity_nesting({"heli"}, cat)},
                      cat);
      FAIL("color mismatch accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ColorMismatch);
      CHECK(e.context()["slot"] == 1);
    }
  }
}

TEST_CASE("act_nesting repositions carried subtrees") {
  Catalog cat = sar_catalog();
  NestingOp load = make_nesting_op({{"heli"}, {"quad"}, {"quad"}}, {{1, 0}, {2, 0}}, cat);

  NestedFleet heli = make_nested_fleet({{"heli", {5, 5}}}, {}, cat);
  NestedFleet q1 = make_nested_fleet({{"quad", {0, 0}}}, {}, cat);
  NestedFleet q2 = make_nested_fleet({{"quad", {1, 1}}}, {}, cat);

  NestedFleet out = act_nesting(load, {heli, q1, q2}, cat);
  CHECK(out.size() == 3);
  CHECK(out.agents[0].pos == Vec2{5, 5});
  CHECK(out.agents[1].pos == Vec2{5, 5});
  CHECK(out.agents[2].pos == Vec2{5, 5});
  CHECK(out.parent == std::vector<ParentEdge>{{1, 0}, {2, 0}});
  validate_nested_fleet(out, cat);

  SUBCASE("identity leaves the fleet unchanged") {
    CHECK(act_nesting(identity_nesting(out.kind_word(), cat), {out}, cat) == out);
  }

  SUBCASE("nesting under a full carrier is rejected") {
    NestingOp extra =
        make_nesting_op({{"heli", "quad", "quad"}, {"quad"}}, {{3, 0}}, cat);
    NestedFleet q3 = make_nested_fleet({{"quad", {2, 2}}}, {}, cat);
    try {
      act_nesting(extra, {out, q3}, cat);
      FAIL("over-capacity nesting accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CapacityExceeded);
    }
  }

  SUBCASE("deep nesting inherits the root position transitively") {
    Catalog deep{{
        AgentKind{"ship", 20, 15, 150, 0.5, {{"heli", 1}}},
        AgentKind{"heli", 10, 100, 60, 1, {{"quad", 2}}},
        AgentKind{"quad", 2, 0, 10, 2, {}},
    }};
    NestedFleet heli_with_quad = act_nesting(
        make_nesting_op({{"heli"}, {"quad"}}, {{1, 0}}, deep),
        {make_nested_fleet({{"heli", {3, 3}}}, {}, deep),
         make_nested_fleet({{"quad", {0, 0}}}, {}, deep)},
        deep);
    NestedFleet aboard = act_nesting(
        make_nesting_op({{"ship"}, {"heli", "quad"}}, {{1, 0}}, deep),
        {make_nested_fleet({{"ship", {9, 9}}}, {}, deep), heli_with_quad}, deep);
    CHECK(aboard.agents[1].pos == Vec2{9, 9});
    CHECK(aboard.agents[2].pos == Vec2{9, 9});
    CHECK(nesting_root(2, aboard.parent) == 0);
  }
}

TEST_CASE("randomized nesting laws and safety") {
  laws::SuiteResult r = laws::nesting_safety(13, 200);
  CHECK(r.failed == 0);
  CHECK(r.passed == 200);
}
