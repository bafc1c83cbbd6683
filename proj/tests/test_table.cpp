// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace rees_lab;
using namespace fixtures;

TEST_CASE("validate_table accepts Z2", "[table]") {
  auto s = validate_table(2, {{0, 1}, {1, 0}});
  REQUIRE(s.order() == 2);
  REQUIRE(s.product(1, 1) == 0);
}

TEST_CASE("validate_table accepts the relabeled semilattice", "[table]") {
  // 0 is an identity and 1 a zero; all 8 triples associate.
  auto s = validate_table(2, {{0, 1}, {1, 1}});
  REQUIRE(oracle::associative(oracle::grid(s)));
}

TEST_CASE("validate_table names the first bad triple", "[table]") {
  try {
    validate_table(2, {{1, 0}, {0, 0}});
    FAIL("expected NotAssociative");
  } catch (NotAssociative const& e) {
    // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1.
    CHECK(e.i() == 0);
    CHECK(e.j() == 0);
    CHECK(e.k() == 1);
  }
}

TEST_CASE("validate_table rejects out of range entries", "[table]") {
  try {
    validate_table(2, {{0, 1}, {2, 0}});
    FAIL("expected NotClosed");
  } catch (NotClosed const& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 0);
  }
  REQUIRE_THROWS_AS(validate_table(2, {{0, -1}, {0, 0}}), NotClosed);
  REQUIRE_THROWS_AS(validate_table(0, {}), InvalidTable);
  REQUIRE_THROWS_AS(validate_table(2, {{0, 1}}), InvalidTable);
  REQUIRE_THROWS_AS(validate_table(2, {{0, 1}, {0}}), InvalidTable);
}

TEST_CASE("validate_table agrees with brute force on all order 2 grids",
          "[table][oracle]") {
  int accepted = 0;
  for (int code = 0; code < 16; ++code) {
    oracle::Grid g{{std::size_t(code & 1), std::size_t((code >> 1) & 1)},
                   {std::size_t((code >> 2) & 1), std::size_t((code >> 3) & 1)}};
    std::vector<std::vector<std::int64_t>> raw{
        {std::int64_t(g[0][0]), std::int64_t(g[0][1])},
        {std::int64_t(g[1][0]), std::int64_t(g[1][1])}};
    bool ok = true;
    try {
      validate_table(2, raw);
    } catch (NotAssociative const&) {
      ok = false;
    }
    CHECK(ok == oracle::associative(g));
    accepted += ok;
  }
  CHECK(accepted == 8);
}

TEST_CASE("named tables", "[table]") {
  CHECK(oracle::grid(rz2()) == oracle::Grid{{0, 1}, {0, 1}});
  CHECK(oracle::grid(lz2()) == oracle::Grid{{0, 0}, {1, 1}});
  CHECK(oracle::grid(ff3()) == oracle::Grid{{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
  CHECK(oracle::grid(sl2()) == oracle::Grid{{0, 0}, {0, 1}});
  CHECK(oracle::grid(named::cyclic_group(3))
        == oracle::Grid{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(oracle::grid(named::null_semigroup(3))
        == oracle::Grid{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(named_table("trivial", std::nullopt).order() == 1);
  CHECK(named_table("right_zero", 4) == named::right_zero(4));
  CHECK(named_table("null", 2) == named::null_semigroup(2));
  REQUIRE_THROWS_AS(named_table("no_such_table", 2), InvalidArgument);
  REQUIRE_THROWS_AS(named_table("flipflop3", 4), InvalidArgument);
  REQUIRE_THROWS_AS(named_table("left_zero", std::nullopt), InvalidArgument);
  REQUIRE_THROWS_AS(named_table("left_zero", 0), InvalidArgument);
}

TEST_CASE("direct_product", "[table]") {
  auto p = direct_product(z2(), rz2());
  REQUIRE(p.order() == 4);
  CHECK(is_right_group(p));
  // (1,0)(1,1) = (0,1), flat 0 * 2 + 1.
  CHECK(p.product(2, 3) == 1);
  CHECK(are_isomorphic(direct_product(triv(), ff3()), ff3()));
  auto q = direct_product(lz2(), z2());
  CHECK(q.order() == 4);
  CHECK(oracle::associative(oracle::grid(q)));
  CHECK(is_homomorphism(q, lz2(), product_projection_left(lz2(), z2())));
  CHECK(is_homomorphism(q, z2(), product_projection_right(lz2(), z2())));
}

TEST_CASE("rees_matrix", "[table][rees]") {
  auto r = rees_matrix(triv(), 3, ElementMapping::constant(3, 0, 1));
  CHECK(r.table == named::right_zero(3));

  auto m = rees_matrix(z2(), 2, map({0, 0}, 2));
  REQUIRE(m.table.order() == 4);
  CHECK(are_isomorphic(m.table, direct_product(z2(), rz2())));

  auto n = rees_matrix(sl2(), 1, map({0}, 2));
  CHECK(n.table == named::null_semigroup(2));

  REQUIRE_THROWS_AS(rees_matrix(z2(), 2, map({0}, 2)), InvalidArgument);
  REQUIRE_THROWS_AS(rees_matrix(z2(), 1, map({0}, 3)), InvalidArgument);
}

TEST_CASE("rees_matrix obeys the defining product", "[table][rees]") {
  std::mt19937_64 rng(7);
  for (auto const& a : small_corpus()) {
    for (std::size_t lambda = 1; lambda <= 3; ++lambda) {
      std::vector<element_index> im(lambda);
      for (auto& x : im) {
        x = rng() % a.order();
      }
      ElementMapping p(im, a.order());
      auto           m = rees_matrix(a, lambda, p);
      REQUIRE(oracle::associative(oracle::grid(m.table)));
      for (element_index s = 0; s < a.order(); ++s) {
        for (std::size_t l = 0; l < lambda; ++l) {
          for (element_index t = 0; t < a.order(); ++t) {
            for (std::size_t mu = 0; mu < lambda; ++mu) {
              auto lhs = m.table.product(s * lambda + l, t * lambda + mu);
              auto rhs = a.product(a.product(s, p[l]), t) * lambda + mu;
              REQUIRE(lhs == rhs);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("is_ideal", "[table]") {
  CHECK(is_ideal(sl2(), {0}));
  CHECK_FALSE(is_ideal(sl2(), {1}));
  CHECK(is_ideal(ff3(), {0, 1, 2}));
  CHECK(is_ideal(ff3(), {1, 2}));
  REQUIRE_THROWS_AS(is_ideal(sl2(), {}), InvalidArgument);
  REQUIRE_THROWS_AS(is_ideal(sl2(), {2}), InvalidArgument);
}

TEST_CASE("is_retract_homomorphism", "[table]") {
  CHECK(is_retract_homomorphism(ff3(), {0, 1, 2}, ElementMapping::identity(3)));
  // phi(2 * 0) = phi(2) = 2 but phi(2) * phi(0) = 2 * 1 = 1.
  CHECK_FALSE(is_retract_homomorphism(ff3(), {1, 2}, map({1, 1, 2}, 3)));
  CHECK(is_retract_homomorphism(sl2(), {0}, map({0, 0}, 2)));
  REQUIRE_THROWS_AS(is_retract_homomorphism(sl2(), {1}, map({1, 1}, 2)),
                    InvalidArgument);
}

TEST_CASE("group_ideal_retraction", "[table]") {
  CHECK(group_ideal_retraction(z2(), {0, 1}).images()
        == std::vector<element_index>{0, 1});
  CHECK(group_ideal_retraction(sl2(), {0}).images()
        == std::vector<element_index>{0, 0});
  CHECK(group_ideal_retraction(named::cyclic_group(3), {0, 1, 2}).images()
        == std::vector<element_index>{0, 1, 2});
  REQUIRE_THROWS_AS(group_ideal_retraction(ff3(), {1, 2}), InvalidArgument);
  REQUIRE_THROWS_AS(group_ideal_retraction(sl2(), {1}), InvalidArgument);
}

TEST_CASE("group_ideal_retraction is a retraction", "[table][property]") {
  std::size_t found = 0;
  for (auto const& s : corpus_up_to(4)) {
    for (std::size_t mask = 1; mask < (1u << s.order()); ++mask) {
      std::vector<element_index> subset;
      for (element_index x = 0; x < s.order(); ++x) {
        if (mask & (1u << x)) {
          subset.push_back(x);
        }
      }
      if (!is_ideal(s, subset)
          || !is_group(induced_subsemigroup(s, subset).table)) {
        continue;
      }
      ++found;
      REQUIRE(is_retract_homomorphism(s, subset, group_ideal_retraction(s, subset)));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("ElementMapping", "[table]") {
  REQUIRE_THROWS_AS(map({0, 2}, 2), InvalidArgument);
  auto f = map({1, 0, 1}, 3);
  CHECK_FALSE(f.is_surjective());
  CHECK(map({1, 0}, 2).is_surjective());
  CHECK(f.then(map({1, 1, 0}, 2)).images() == std::vector<element_index>{1, 1, 1});
}
