// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// This file contains the kernel of the right regular representation, the
// right colon congruence, the right congruence alpha_P of a sandwich mapping,
// compatibility tests and quotients.

#ifndef REES_LAB_RELATIONS_HPP_
#define REES_LAB_RELATIONS_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "exception.hpp"
#include "partition.hpp"
#include "table.hpp"

namespace rees_lab {

  //! a ~ b iff xa = xb for every x, i.e. columns a and b of the table agree.
  inline Partition theta(SemigroupTable const& s) {
    std::size_t const                       n = s.order();
    std::vector<std::vector<element_index>> column(n, std::vector<element_index>(n));
    for (element_index a = 0; a < n; ++a) {
      for (element_index x = 0; x < n; ++x) {
        column[a][x] = s.product(x, a);
      }
    }
    return Partition::from_labels(column);
  }

  //! true iff (a, b) related implies (ac, bc) related for every c.
  inline bool is_right_congruence(SemigroupTable const& s, Partition const& p) {
    if (p.size() != s.order()) {
      throw InvalidArgument("partition and semigroup have different sizes");
    }
    for (element_index a = 0; a < s.order(); ++a) {
      element_index const b = p.class_of(a);
      for (element_index c = 0; c < s.order(); ++c) {
        if (!p.contains(s.product(a, c), s.product(b, c))) {
          return false;
        }
      }
    }
    return true;
  }

  //! true iff (a, b) related implies (ca, cb) related for every c.
  inline bool is_left_congruence(SemigroupTable const& s, Partition const& p) {
    if (p.size() != s.order()) {
      throw InvalidArgument("partition and semigroup have different sizes");
    }
    for (element_index a = 0; a < s.order(); ++a) {
      element_index const b = p.class_of(a);
      for (element_index c = 0; c < s.order(); ++c) {
        if (!p.contains(s.product(c, a), s.product(c, b))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_congruence(SemigroupTable const& s, Partition const& p) {
    return is_right_congruence(s, p) && is_left_congruence(s, p);
  }

  //! (a, b) in rho* iff (sa, sb) in rho for every s. Throws InvalidArgument
  //! unless \p rho is a congruence.
  inline Partition right_colon(SemigroupTable const& s, Partition const& rho) {
    if (!is_congruence(s, rho)) {
      throw InvalidArgument("right colon requires a congruence");
    }
    std::size_t const                       n = s.order();
    std::vector<std::vector<element_index>> key(n, std::vector<element_index>(n));
    for (element_index a = 0; a < n; ++a) {
      for (element_index x = 0; x < n; ++x) {
        key[a][x] = rho.class_of(s.product(x, a));
      }
    }
    return Partition::from_labels(key);
  }

  //! theta*: the right colon congruence of theta.
  inline Partition theta_star(SemigroupTable const& s) {
    return right_colon(s, theta(s));
  }

  //! (a1, a2) related iff a P(b) a1 = a P(b) a2 for every a in \p a and every
  //! b in the domain of \p p. Always a right congruence.
  inline Partition alpha(SemigroupTable const& a, ElementMapping const& p) {
    if (p.domain_size() == 0) {
      throw InvalidArgument("alpha needs a nonempty index set");
    }
    if (p.codomain_order() != a.order()) {
      throw InvalidArgument("mapping does not target the given semigroup");
    }
    // Only the distinct left multipliers a P(b) matter.
    std::vector<bool> is_multiplier(a.order(), false);
    for (auto pb : p.image_set()) {
      for (element_index x = 0; x < a.order(); ++x) {
        is_multiplier[a.product(x, pb)] = true;
      }
    }
    std::vector<element_index> multipliers;
    for (element_index m = 0; m < a.order(); ++m) {
      if (is_multiplier[m]) {
        multipliers.push_back(m);
      }
    }
    std::vector<std::vector<element_index>> key(
        a.order(), std::vector<element_index>(multipliers.size()));
    for (element_index c = 0; c < a.order(); ++c) {
      for (std::size_t k = 0; k < multipliers.size(); ++k) {
        key[c][k] = a.product(multipliers[k], c);
      }
    }
    return Partition::from_labels(key);
  }

  struct Quotient {
    SemigroupTable table;
    //! Sends each element to the index of its class.
    ElementMapping projection;
  };

  //! S / p, whose element k is the class with the k-th smallest
  //! representative. Throws InvalidArgument unless \p p is a congruence.
  inline Quotient quotient(SemigroupTable const& s, Partition const& p) {
    if (!is_congruence(s, p)) {
      throw InvalidArgument("quotient requires a congruence");
    }
    auto const                 reps = p.representatives();
    std::size_t const          k    = reps.size();
    std::vector<element_index> index_of_rep(s.order(), 0);
    for (element_index r = 0; r < k; ++r) {
      index_of_rep[reps[r]] = r;
    }
    std::vector<element_index> proj(s.order());
    for (element_index x = 0; x < s.order(); ++x) {
      proj[x] = index_of_rep[p.class_of(x)];
    }
    std::vector<element_index> cells(k * k);
    for (element_index i = 0; i < k; ++i) {
      for (element_index j = 0; j < k; ++j) {
        cells[i * k + j] = proj[s.product(reps[i], reps[j])];
      }
    }
    return {SemigroupTable::make_nc(k, std::move(cells)),
            ElementMapping(std::move(proj), k)};
  }

}  // namespace rees_lab

#endif  // REES_LAB_RELATIONS_HPP_
