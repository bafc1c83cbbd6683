// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#include <random>  // for mt19937_64

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace rees_lab;
using namespace fixtures;

TEST_CASE("fingerprint examples", "[isomorphism]") {
  CHECK_FALSE(fingerprint(lz2()) == fingerprint(rz2()));
  CHECK_FALSE(fingerprint(z2()) == fingerprint(named::null_semigroup(2)));
  CHECK(fingerprint(z2()).idempotent_count
        == fingerprint(named::null_semigroup(2)).idempotent_count);
}

TEST_CASE("fingerprints are invariant under relabeling", "[isomorphism][property]") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    auto s = random_table(rng);
    REQUIRE(fingerprint(s) == fingerprint(relabeled(s, rng)));
  }
}

TEST_CASE("find_isomorphism examples", "[isomorphism]") {
  auto swapped = validate_table(2, {{1, 0}, {0, 1}});
  auto w       = find_isomorphism(z2(), swapped);
  REQUIRE(w);
  CHECK(*w == IsoWitness{1, 0});
  CHECK_FALSE(find_isomorphism(lz2(), rz2()));
  auto m = rees_matrix(z2(), 2, map({0, 0}, 2)).table;
  auto p = direct_product(z2(), rz2());
  auto v = find_isomorphism(m, p);
  REQUIRE(v);
  CHECK(oracle::is_iso(oracle::grid(m), oracle::grid(p), *v));
  CHECK(oracle::first_iso(oracle::grid(m), oracle::grid(p)) == *v);
}

TEST_CASE("find_isomorphism agrees with all bijections on the corpus",
          "[isomorphism][oracle]") {
  auto const&     corpus = small_corpus();
  std::mt19937_64 rng(17);
  for (auto const& s : corpus) {
    auto t = relabeled(s, rng);
    for (auto const& u : {s, t}) {
      for (auto const& r : corpus) {
        auto got      = find_isomorphism(u, r);
        auto expected = oracle::first_iso(oracle::grid(u), oracle::grid(r));
        REQUIRE(got.has_value() == expected.has_value());
        if (got) {
          // The witness is the lexicographically first one.
          REQUIRE(*got == *expected);
        }
      }
    }
  }
}

TEST_CASE("find_isomorphism on order 6 relabelings", "[isomorphism][property]") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    auto s = random_table(rng);
    auto t = relabeled(s, rng);
    auto w = find_isomorphism(s, t);
    REQUIRE(w);
    REQUIRE(oracle::is_iso(oracle::grid(s), oracle::grid(t), *w));
    REQUIRE(find_isomorphism(s, s));
  }
}

TEST_CASE("canonical_form examples", "[isomorphism]") {
  CHECK(canonical_form(validate_table(2, {{1, 0}, {0, 1}})) == canonical_form(z2()));
  CHECK(canonical_form(triv()) == triv());
  CHECK(canonical_form(lz2()) == lz2());
}

TEST_CASE("canonical_form is the least relabeling", "[isomorphism][oracle]") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 60; ++k) {
    auto s = random_table(rng);
    if (s.order() > 6) {
      continue;
    }
    auto c = canonical_form(s);
    REQUIRE(oracle::grid(c) == oracle::canonical(oracle::grid(s)));
    REQUIRE(canonical_form(c) == c);
    REQUIRE(canonical_form(relabeled(s, rng)) == c);
  }
}
