// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"

using namespace rees_lab;

namespace {
  TheoremReport run(TheoremId id, std::size_t order, std::size_t b_size) {
    Bounds b      = default_bounds(id);
    b.a_order_max = b.c_order_max = order;
    b.b_size_max                  = b_size;
    return verify_theorem(id, b);
  }
}  // namespace

TEST_CASE("theorem names round trip", "[theorems]") {
  for (auto const& [id, name] : theorem_names) {
    CHECK(theorem_from_string(name) == id);
    CHECK(to_string(id) == name);
  }
  REQUIRE_THROWS_AS(theorem_from_string("t99"), InvalidArgument);
}

TEST_CASE("sweeps at small bounds", "[theorems]") {
  auto th1 = run(TheoremId::th1, 2, 2);
  CHECK(th1.failed == 0);
  CHECK(th1.passed > 0);
  auto t1 = run(TheoremId::t1, 2, 1);
  CHECK(t1.failed == 0);
  CHECK(t1.instances_examined == t1.passed + t1.hypothesis_unmet);
  auto rs = verify_theorem(TheoremId::rsurj, default_bounds(TheoremId::rsurj));
  CHECK(rs.failed == 0);
  CHECK(rs.passed > 0);
}

TEST_CASE("every theorem at default bounds", "[theorems]") {
  for (auto const& [id, name] : theorem_names) {
    INFO(name);
    auto r = verify_theorem(id, default_bounds(id));
    CHECK(r.theorem_id == name);
    CHECK(r.failed == 0);
    CHECK(r.passed > 0);
    CHECK_FALSE(r.counterexample);
    CHECK(r.instances_examined == r.passed + r.failed + r.hypothesis_unmet);
  }
}

TEST_CASE("existential reading", "[theorems]") {
  for (auto id : {TheoremId::t1, TheoremId::t2, TheoremId::t3, TheoremId::t5,
                  TheoremId::t6, TheoremId::t7}) {
    Bounds b      = default_bounds(id);
    b.existential = true;
    auto r        = verify_theorem(id, b);
    CHECK(r.failed == 0);
    CHECK(r.passed > 0);
  }
}

TEST_CASE("sampling is reproducible", "[theorems]") {
  Bounds b      = default_bounds(TheoremId::th1);
  b.sample_rate = 0.3;
  b.seed        = 42;
  auto r1       = verify_theorem(TheoremId::th1, b);
  auto r2       = verify_theorem(TheoremId::th1, b);
  CHECK(r1.instances_examined == r2.instances_examined);
  CHECK(r1.passed == r2.passed);
  auto full = verify_theorem(TheoremId::th1, default_bounds(TheoremId::th1));
  CHECK(r1.instances_examined < full.instances_examined);
}

TEST_CASE("campaign budget", "[theorems]") {
  Bounds b = default_bounds(TheoremId::th1);
  b.budget = 5;
  REQUIRE_THROWS_AS(verify_theorem(TheoremId::th1, b), BudgetExceeded);
}

TEST_CASE("wider bounds", "[theorems][slow]") {
  for (auto id : {TheoremId::t1, TheoremId::t2, TheoremId::t3, TheoremId::t5,
                  TheoremId::t6, TheoremId::t7}) {
    auto r = run(id, 3, 2);
    CHECK(r.instances_examined == 63058);
    CHECK(r.failed == 0);
  }
  for (auto id : {TheoremId::th1, TheoremId::p4, TheoremId::cmedial}) {
    auto r = run(id, 4, 3);
    CHECK(r.instances_examined == 16801);
    CHECK(r.failed == 0);
  }
}
