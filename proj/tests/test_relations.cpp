// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace rees_lab;
using namespace fixtures;

namespace {
  using Classes = std::vector<std::vector<element_index>>;
}

TEST_CASE("theta examples", "[relations]") {
  CHECK(theta(lz2()).is_universal());
  CHECK(theta(rz2()).is_identity());
  CHECK(theta(sl2()).is_identity());
  CHECK(theta(ff3()).is_identity());
  CHECK(theta(named::null_semigroup(3)).is_universal());
}

TEST_CASE("theta matches the column definition on random tables",
          "[relations][oracle]") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    auto s  = random_table(rng);
    auto g  = oracle::grid(s);
    auto th = theta(s);
    for (element_index a = 0; a < s.order(); ++a) {
      for (element_index b = 0; b < s.order(); ++b) {
        REQUIRE(th.contains(a, b) == oracle::theta_related(g, a, b));
      }
    }
    REQUIRE(is_congruence(s, th));
  }
}

TEST_CASE("right_colon examples", "[relations]") {
  CHECK(right_colon(rz2(), Partition::identity(2)).is_identity());
  CHECK(right_colon(lz2(), theta(lz2())).is_universal());
  CHECK(right_colon(z2(), Partition::identity(2)).is_identity());
  auto not_congruence = Partition::from_classes(3, {{0, 1}, {2}});
  REQUIRE_THROWS_AS(right_colon(ff3(), not_congruence), InvalidArgument);
}

TEST_CASE("right_colon is a congruence containing its argument",
          "[relations][property]") {
  for (auto const& s : small_corpus()) {
    auto rho  = theta(s);
    auto star = right_colon(s, rho);
    CHECK(is_congruence(s, star));
    CHECK(rho.is_subset_of(star));
    for (element_index a = 0; a < s.order(); ++a) {
      for (element_index b = 0; b < s.order(); ++b) {
        bool expected = true;
        for (element_index x = 0; x < s.order(); ++x) {
          expected = expected && rho.contains(s.product(x, a), s.product(x, b));
        }
        REQUIRE(star.contains(a, b) == expected);
      }
    }
  }
}

TEST_CASE("alpha examples", "[relations]") {
  CHECK(alpha(lz2(), map({0}, 2)).is_universal());
  CHECK(alpha(z2(), map({0}, 2)).is_identity());
  auto a = alpha(ff3(), map({1}, 3));
  CHECK(a.classes() == Classes{{0, 1}, {2}});
  CHECK(is_right_congruence(ff3(), a));
  CHECK_FALSE(is_congruence(ff3(), a));
  REQUIRE_THROWS_AS(alpha(ff3(), ElementMapping({}, 3)), InvalidArgument);
}

TEST_CASE("alpha is always a right congruence", "[relations][property]") {
  for (auto const& s : small_corpus()) {
    for (std::size_t b = 1; b <= 2; ++b) {
      for_each_mapping(b, s.order(), [&](ElementMapping const& p) {
        auto al = alpha(s, p);
        REQUIRE(is_right_congruence(s, al));
        for (element_index x = 0; x < s.order(); ++x) {
          for (element_index y = 0; y < s.order(); ++y) {
            bool expected = true;
            for (element_index a = 0; a < s.order(); ++a) {
              for (std::size_t k = 0; k < b; ++k) {
                expected = expected
                           && s.product(a, p[k], x) == s.product(a, p[k], y);
              }
            }
            REQUIRE(al.contains(x, y) == expected);
          }
        }
      });
    }
  }
}

TEST_CASE("congruence checks", "[relations]") {
  for (auto const& s : small_corpus()) {
    CHECK(is_right_congruence(s, Partition::identity(s.order())));
    CHECK(is_right_congruence(s, Partition::universal(s.order())));
    CHECK(is_congruence(s, theta(s)));
  }
  auto p = Partition::from_classes(3, {{0, 1}, {2}});
  CHECK(is_right_congruence(ff3(), p));
  CHECK_FALSE(is_left_congruence(ff3(), p));
}

TEST_CASE("right congruences of commutative semigroups are congruences",
          "[relations][property]") {
  for (auto const& s : small_corpus()) {
    if (!is_commutative(s)) {
      continue;
    }
    for (std::size_t b = 1; b <= 2; ++b) {
      for_each_mapping(b, s.order(), [&](ElementMapping const& p) {
        REQUIRE(is_congruence(s, alpha(s, p)));
      });
    }
  }
}

TEST_CASE("quotient examples", "[relations]") {
  auto q = quotient(lz2(), Partition::universal(2));
  CHECK(q.table == triv());
  CHECK(q.projection.images() == std::vector<element_index>{0, 0});

  for (auto const& s : small_corpus()) {
    auto id = quotient(s, Partition::identity(s.order()));
    CHECK(id.table == s);
    CHECK(id.projection.images() == ElementMapping::identity(s.order()).images());
  }
  CHECK(quotient(sl2(), theta(sl2())).table == sl2());
  REQUIRE_THROWS_AS(quotient(ff3(), Partition::from_classes(3, {{0, 1}, {2}})),
                    InvalidArgument);
}

TEST_CASE("quotient projection is a surjective homomorphism",
          "[relations][property]") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto s = random_table(rng);
    auto q = quotient(s, theta(s));
    REQUIRE(oracle::associative(oracle::grid(q.table)));
    REQUIRE(q.projection.is_surjective());
    REQUIRE(is_homomorphism(s, q.table, q.projection));
    REQUIRE(Partition::from_labels(q.projection.images()) == theta(s));
  }
}

TEST_CASE("Partition", "[relations]") {
  auto p = Partition::from_labels(std::vector<int>{5, 3, 5, 3, 9});
  CHECK(p.class_map() == std::vector<element_index>{0, 1, 0, 1, 4});
  CHECK(p.number_of_classes() == 3);
  CHECK(p.representatives() == std::vector<element_index>{0, 1, 4});
  CHECK(p.classes() == Classes{{0, 2}, {1, 3}, {4}});
  CHECK(Partition::identity(5).is_subset_of(p));
  CHECK(p.is_subset_of(Partition::universal(5)));
  REQUIRE_THROWS_AS(Partition::make({1, 0}), InvalidArgument);
  REQUIRE_THROWS_AS(Partition::from_classes(3, {{0, 1}}), InvalidArgument);
}
