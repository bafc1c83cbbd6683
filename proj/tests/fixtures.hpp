// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// Shared test inputs: the named tables and a generator of random valid
// tables up to order 6.

#ifndef REES_LAB_TESTS_FIXTURES_HPP_
#define REES_LAB_TESTS_FIXTURES_HPP_

#include <random>  // for mt19937_64, uniform_int_distribution
#include <vector>  // for vector

#include "rees_lab/rees_lab.hpp"

#include "oracles.hpp"

namespace fixtures {

  using namespace rees_lab;

  inline SemigroupTable lz2() {
    return named::left_zero(2);
  }
  inline SemigroupTable rz2() {
    return named::right_zero(2);
  }
  inline SemigroupTable z2() {
    return named::cyclic_group(2);
  }
  inline SemigroupTable triv() {
    return named::trivial();
  }
  inline SemigroupTable sl2() {
    return named::semilattice2();
  }
  inline SemigroupTable ff3() {
    return named::flipflop3();
  }

  inline ElementMapping map(std::vector<element_index> im, std::size_t cod) {
    return ElementMapping(std::move(im), cod);
  }

  inline std::vector<SemigroupTable> const& small_corpus() {
    static std::vector<SemigroupTable> const c = corpus_up_to(3);
    return c;
  }

  inline SemigroupTable relabeled(SemigroupTable const& s, std::mt19937_64& rng) {
    return relabel(s, oracle::random_permutation(s.order(), rng));
  }

  //! A random valid table of order at most 6: a corpus member, a direct
  //! product of two, or a Rees matrix semigroup, randomly relabeled.
  inline SemigroupTable random_table(std::mt19937_64& rng) {
    auto const& corpus = small_corpus();
    auto        pick   = [&](std::size_t max_order) {
      while (true) {
        auto const& s = corpus[std::uniform_int_distribution<std::size_t>(
            0, corpus.size() - 1)(rng)];
        if (s.order() <= max_order) {
          return s;
        }
      }
    };
    SemigroupTable out = named::trivial();
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        out = pick(3);
        break;
      case 1: {
        auto a = pick(3);
        out    = direct_product(a, pick(6 / a.order()));
        break;
      }
      default: {
        auto        a      = pick(3);
        std::size_t lambda = std::uniform_int_distribution<std::size_t>(
            1, 6 / a.order())(rng);
        std::vector<element_index> im(lambda);
        for (auto& x : im) {
          x = std::uniform_int_distribution<std::size_t>(0, a.order() - 1)(rng);
        }
        out = rees_matrix(a, lambda, ElementMapping(im, a.order())).table;
        break;
      }
    }
    return relabeled(out, rng);
  }

}  // namespace fixtures

#endif  // REES_LAB_TESTS_FIXTURES_HPP_
