// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#include <random>  // for mt19937_64
#include <set>     // for set

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace rees_lab;
using namespace fixtures;

TEST_CASE("simplicity examples", "[predicates]") {
  CHECK(is_right_simple(rz2()));
  CHECK_FALSE(is_right_simple(lz2()));
  CHECK(is_right_simple(z2()));
  CHECK(is_left_simple(lz2()));
  CHECK_FALSE(is_left_simple(rz2()));
  CHECK(is_left_simple(z2()));
  CHECK(is_simple(z2()));
  CHECK_FALSE(is_simple(sl2()));
  CHECK(is_simple(rz2()));
}

TEST_CASE("cancellation and groups", "[predicates]") {
  CHECK(is_left_cancellative(z2()));
  CHECK_FALSE(is_left_cancellative(lz2()));
  CHECK(is_left_cancellative(rz2()));
  CHECK(is_right_group(direct_product(z2(), rz2())));
  CHECK(is_right_group(named::right_zero(3)));
  CHECK_FALSE(is_right_group(lz2()));
  CHECK(is_group(z2()));
  CHECK(is_group(triv()));
  CHECK_FALSE(is_group(sl2()));
}

TEST_CASE("equalizer, reductive, medial, left commutative", "[predicates]") {
  CHECK(is_left_equalizer_simple(lz2()));
  CHECK_FALSE(is_left_equalizer_simple(sl2()));
  CHECK(is_left_equalizer_simple(z2()));
  CHECK(is_left_reductive(rz2()));
  CHECK_FALSE(is_left_reductive(lz2()));
  CHECK(is_left_reductive(ff3()));
  CHECK(is_medial(lz2()));
  CHECK(is_medial(sl2()));
  CHECK_FALSE(is_medial(ff3()));
  CHECK(is_left_commutative(rz2()));
  CHECK_FALSE(is_left_commutative(lz2()));
  CHECK(is_left_commutative(named::cyclic_group(3)));
}

TEST_CASE("property_profile", "[predicates]") {
  auto r = property_profile(rz2());
  CHECK(r.right_simple);
  CHECK_FALSE(r.left_simple);
  CHECK(r.simple);
  CHECK(r.left_cancellative);
  CHECK(r.right_group);
  CHECK(r.left_equalizer_simple);
  CHECK(r.left_reductive);
  CHECK(r.medial);
  CHECK(r.left_commutative);

  auto l = property_profile(lz2());
  CHECK_FALSE(l.right_simple);
  CHECK(l.left_simple);
  CHECK(l.simple);
  CHECK_FALSE(l.left_cancellative);
  CHECK_FALSE(l.right_group);
  CHECK(l.left_equalizer_simple);
  CHECK_FALSE(l.left_reductive);
  CHECK(l.medial);
  CHECK_FALSE(l.left_commutative);

  auto t = property_profile(triv());
  CHECK((t.right_simple && t.left_simple && t.simple && t.left_cancellative
         && t.right_group && t.group && t.left_equalizer_simple
         && t.left_reductive && t.medial && t.left_commutative
         && t.commutative));
}

TEST_CASE("predicates agree with their definitions on the corpus",
          "[predicates][oracle]") {
  for (auto const& s : corpus_up_to(4)) {
    auto        g = oracle::grid(s);
    std::size_t n = g.size();
    auto all = [&](auto&& f) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = 0; d < n; ++d) {
              if (!f(a, b, c, d)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    };
    bool right_simple = true, left_simple = true;
    for (std::size_t a = 0; a < n; ++a) {
      std::set<std::size_t> as, sa;
      for (std::size_t x = 0; x < n; ++x) {
        as.insert(g[a][x]);
        sa.insert(g[x][a]);
      }
      right_simple = right_simple && as.size() == n;
      left_simple  = left_simple && sa.size() == n;
    }
    bool left_canc = all([&](auto x, auto a, auto b, auto) {
      return g[x][a] != g[x][b] || a == b;
    });
    bool les = all([&](auto x, auto a, auto b, auto y) {
      return g[x][a] != g[x][b] || g[y][a] == g[y][b];
    });
    bool medial = all([&](auto a, auto x, auto y, auto b) {
      return g[g[g[a][x]][y]][b] == g[g[g[a][y]][x]][b];
    });
    bool lcomm = all([&](auto a, auto b, auto c, auto) {
      return g[g[a][b]][c] == g[g[b][a]][c];
    });
    bool comm = all([&](auto a, auto b, auto, auto) { return g[a][b] == g[b][a]; });
    bool reductive = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        reductive = reductive && !oracle::theta_related(g, a, b);
      }
    }

    INFO(write_table(s));
    CHECK(is_right_simple(s) == right_simple);
    CHECK(is_left_simple(s) == left_simple);
    CHECK(is_simple(s) == oracle::simple(g));
    CHECK(is_left_cancellative(s) == left_canc);
    CHECK(is_right_group(s) == (left_canc && right_simple));
    CHECK(is_group(s) == (right_simple && left_simple));
    CHECK(is_left_equalizer_simple(s) == les);
    CHECK(is_left_reductive(s) == reductive);
    CHECK(is_medial(s) == medial);
    CHECK(is_left_commutative(s) == lcomm);
    CHECK(is_commutative(s) == comm);
  }
}

TEST_CASE("right groups decompose as a group times a right zero semigroup",
          "[predicates][property]") {
  for (auto const& s : corpus_up_to(4)) {
    auto d = right_group_decomposition(s);
    REQUIRE(d.has_value() == is_right_group(s));
    if (d) {
      CHECK(is_group(d->group));
      auto target = direct_product(d->group, named::right_zero(d->right_zero_order));
      CHECK(is_isomorphism(s, target, d->witness));
    }
  }
}

TEST_CASE("predicates are invariant under relabeling", "[predicates][property]") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto s = random_table(rng);
    auto t = relabeled(s, rng);
    auto p = property_profile(s);
    auto q = property_profile(t);
    CHECK(p.right_simple == q.right_simple);
    CHECK(p.simple == q.simple);
    CHECK(p.right_group == q.right_group);
    CHECK(p.left_equalizer_simple == q.left_equalizer_simple);
    CHECK(p.medial == q.medial);
    CHECK(p.left_commutative == q.left_commutative);
  }
}
