// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#ifndef REES_LAB_RETRACTION_HPP_
#define REES_LAB_RETRACTION_HPP_

#include <vector>  // for vector

#include "exception.hpp"
#include "predicates.hpp"
#include "table.hpp"

namespace rees_lab {

  //! For an ideal I of S that is a group with identity e, the retraction
  //! a |-> ae of S onto I (as an endomorphism of S).
  inline ElementMapping
  group_ideal_retraction(SemigroupTable const&      s,
                         std::vector<element_index> ideal_subset) {
    if (!is_ideal(s, ideal_subset)) {
      throw InvalidArgument("the subset is not an ideal");
    }
    auto sub = induced_subsemigroup(s, std::move(ideal_subset));
    auto e   = identity_element(sub.table);
    if (!e || !is_group(sub.table)) {
      throw InvalidArgument("the ideal is not a group");
    }
    element_index const        id = sub.elements[*e];
    std::vector<element_index> im(s.order());
    for (element_index a = 0; a < s.order(); ++a) {
      im[a] = s.product(a, id);
    }
    return ElementMapping(std::move(im), s.order());
  }

}  // namespace rees_lab

#endif  // REES_LAB_RETRACTION_HPP_
