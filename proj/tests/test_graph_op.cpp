#include "netop/graph_op.hpp"

#include <doctest.h>

#include "netop/error.hpp"
#include "netop/laws.hpp"

using namespace netop;

namespace {

// The two-edge blueprint of the worked example: slots (2,2), adds
// {0,2} and {1,3} across the blocks.
GraphOp bridge_op() { return make_graph_op({2, 2}, {{0, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("make_graph_op validates and canonicalizes") {
  GraphOp f = bridge_op();
  CHECK(f.inputs == std::vector<std::size_t>{2, 2});
  CHECK(f.output_size() == 4);
  CHECK(f.edges == std::vector<Edge>{{0, 2}, {1, 3}});

  // unordered pairs get normalized, edge list gets sorted
  GraphOp g = make_graph_op({2, 2}, {{3, 1}, {2, 0}});
  CHECK(g == f);

  GraphOp edgeless = make_graph_op({3}, {});
  CHECK(edgeless.output_size() == 3);
  CHECK(edgeless.edges.empty());

  CHECK_THROWS_WITH_AS(make_graph_op({2}, {{0, 0}}), "edge is a self-loop", Error);
  try {
    make_graph_op({2}, {{0, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SelfLoop);
    CHECK(e.context()["edge"] == nlohmann::json::array({0, 0}));
  }

  CHECK_THROWS_AS(make_graph_op({2}, {{0, 2}}), Error);
  try {
    make_graph_op({2}, {{0, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }

  try {
    make_graph_op({3}, {{0, 1}, {1, 0}});
    FAIL("duplicate not rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
    CHECK(e.context()["edge"] == nlohmann::json::array({0, 1}));
  }

  // nullary blueprint: no slots, output type 0
  GraphOp nullary = make_graph_op({}, {});
  CHECK(nullary.slot_count() == 0);
  CHECK(nullary.output_size() == 0);
}

TEST_CASE("identity_op") {
  CHECK(identity_op(0) == make_graph_op({0}, {}));
  CHECK(identity_op(4) == make_graph_op({4}, {}));
  CHECK(identity_op(1).inputs == std::vector<std::size_t>{1});
}

TEST_CASE("compose grafts blueprints by edge-set union") {
  GraphOp f = bridge_op();
  GraphOp pair_link = make_graph_op({1, 1}, {{0, 1}});

  GraphOp composite = compose(f, {pair_link, pair_link});
  CHECK(composite.inputs == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(composite.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  validate_graph_op(composite);

  SUBCASE("unit laws") {
    CHECK(compose(identity_op(4), {f}) == f);
    CHECK(compose(f, {identity_op(2), identity_op(2)}) == f);
  }

  SUBCASE("slot type mismatch names the slot") {
    GraphOp wrong = identity_op(3);
    try {
      compose(f, {pair_link, wrong});
      FAIL("mismatch not rejected");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SlotTypeMismatch);
      CHECK(e.context()["slot"] == 1);
      CHECK(e.context()["expected"] == 2);
      CHECK(e.context()["actual"] == 3);
    }
  }

  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(compose(f, {pair_link}), Error);
  }

  SUBCASE("outer edge duplicating an inner edge collapses") {
    GraphOp outer = make_graph_op({2}, {{0, 1}});
    GraphOp inner = make_graph_op({2}, {{0, 1}});
    CHECK(compose(outer, {inner}) == inner);
  }
}

TEST_CASE("permute_inputs relabels through the block permutation") {
  SlotPermutation swap = make_slot_permutation({1, 0});

  SUBCASE("the bridge op is symmetric under the swap") {
    GraphOp f = bridge_op();
    CHECK(permute_inputs(f, swap) == f);
  }

  SUBCASE("asymmetric shape: blocks move, edge follows") {
    GraphOp f = make_graph_op({1, 2}, {{0, 1}});
    GraphOp g = permute_inputs(f, swap);
    CHECK(g.inputs == std::vector<std::size_t>{2, 1});
    CHECK(g.edges == std::vector<Edge>{{0, 2}});
  }

  SUBCASE("identity permutation") {
    GraphOp f = make_graph_op({1, 2}, {{0, 1}});
    CHECK(permute_inputs(f, make_slot_permutation({0, 1})) == f);
  }

  SUBCASE("size mismatch rejected") {
    CHECK_THROWS_AS(permute_inputs(bridge_op(), make_slot_permutation({0})), Error);
    CHECK_THROWS_AS(make_slot_permutation({0, 0}), Error);
    CHECK_THROWS_AS(make_slot_permutation({1, 2}), Error);
  }
}

TEST_CASE("overlay is the edge-set union on a fixed shape") {
  GraphOp f = bridge_op();
  CHECK(overlay(f, f) == f);
  CHECK(overlay(f, make_graph_op({2, 2}, {})) == f);
  CHECK(overlay(make_graph_op({2, 2}, {{0, 2}}), make_graph_op({2, 2}, {{1, 3}})) == f);
  CHECK_THROWS_AS(overlay(f, identity_op(4)), Error);
}

TEST_CASE("randomized operad laws") {
  laws::SuiteResult r = laws::operad_laws(7, 200);
  CHECK(r.failed == 0);
  CHECK(r.passed == 200);
}
