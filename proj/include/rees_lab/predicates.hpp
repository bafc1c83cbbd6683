// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// Brute force decision procedures for the structural properties that appear
// as hypotheses and conclusions of the right regular triple results. Each one
// transcribes its defining condition directly.

#ifndef REES_LAB_PREDICATES_HPP_
#define REES_LAB_PREDICATES_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "isomorphism.hpp"
#include "relations.hpp"
#include "table.hpp"

namespace rees_lab {

  //! aS = S for every a.
  inline bool is_right_simple(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index a = 0; a < n; ++a) {
      std::vector<bool> hit(n, false);
      std::size_t       count = 0;
      for (element_index x = 0; x < n; ++x) {
        if (!hit[s.product(a, x)]) {
          hit[s.product(a, x)] = true;
          ++count;
        }
      }
      if (count != n) {
        return false;
      }
    }
    return true;
  }

  //! Sa = S for every a.
  inline bool is_left_simple(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index a = 0; a < n; ++a) {
      std::vector<bool> hit(n, false);
      std::size_t       count = 0;
      for (element_index x = 0; x < n; ++x) {
        if (!hit[s.product(x, a)]) {
          hit[s.product(x, a)] = true;
          ++count;
        }
      }
      if (count != n) {
        return false;
      }
    }
    return true;
  }

  //! SaS = S for every a.
  inline bool is_simple(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index a = 0; a < n; ++a) {
      std::vector<bool> hit(n, false);
      std::size_t       count = 0;
      for (element_index x = 0; x < n; ++x) {
        element_index const xa = s.product(x, a);
        for (element_index y = 0; y < n; ++y) {
          if (!hit[s.product(xa, y)]) {
            hit[s.product(xa, y)] = true;
            ++count;
          }
        }
      }
      if (count != n) {
        return false;
      }
    }
    return true;
  }

  //! xa = xb implies a = b.
  inline bool is_left_cancellative(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index x = 0; x < n; ++x) {
      std::vector<bool> hit(n, false);
      for (element_index a = 0; a < n; ++a) {
        if (hit[s.product(x, a)]) {
          return false;
        }
        hit[s.product(x, a)] = true;
      }
    }
    return true;
  }

  inline bool is_commutative(SemigroupTable const& s) {
    for (element_index a = 0; a < s.order(); ++a) {
      for (element_index b = a + 1; b < s.order(); ++b) {
        if (s.product(a, b) != s.product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  //! The two-sided identity, if there is one.
  inline std::optional<element_index> identity_element(SemigroupTable const& s) {
    for (element_index e = 0; e < s.order(); ++e) {
      bool ok = true;
      for (element_index x = 0; x < s.order() && ok; ++x) {
        ok = s.product(e, x) == x && s.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  inline bool is_group(SemigroupTable const& s) {
    auto e = identity_element(s);
    if (!e) {
      return false;
    }
    for (element_index a = 0; a < s.order(); ++a) {
      bool has_inverse = false;
      for (element_index b = 0; b < s.order() && !has_inverse; ++b) {
        has_inverse = s.product(a, b) == *e && s.product(b, a) == *e;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  //! Left cancellative and right simple.
  inline bool is_right_group(SemigroupTable const& s) {
    return is_left_cancellative(s) && is_right_simple(s);
  }

  //! A right group written as G x right_zero(k).
  struct RightGroupDecomposition {
    SemigroupTable group;
    std::size_t    right_zero_order;
    //! Isomorphism from the input onto direct_product(group, right_zero(k)).
    IsoWitness witness;
  };

  //! Tries to exhibit \p s as a group times a right zero semigroup: k is the
  //! number of idempotents and G = Se for the least idempotent e. Decides
  //! right-group-ness without consulting cancellativity or simplicity.
  inline std::optional<RightGroupDecomposition>
  right_group_decomposition(SemigroupTable const& s) {
    std::vector<element_index> idempotents;
    for (element_index a = 0; a < s.order(); ++a) {
      if (s.product(a, a) == a) {
        idempotents.push_back(a);
      }
    }
    if (idempotents.empty() || s.order() % idempotents.size() != 0) {
      return std::nullopt;
    }
    element_index const        e = idempotents.front();
    std::vector<element_index> s_e;
    for (element_index x = 0; x < s.order(); ++x) {
      s_e.push_back(s.product(x, e));
    }
    auto g = induced_subsemigroup(s, s_e);
    if (!is_group(g.table)) {
      return std::nullopt;
    }
    std::size_t const k = idempotents.size();
    auto model = direct_product(g.table, named::right_zero(k));
    auto iso   = find_isomorphism(s, model);
    if (!iso) {
      return std::nullopt;
    }
    return RightGroupDecomposition{std::move(g.table), k, std::move(*iso)};
  }

  //! xa = xb for some x implies ya = yb for all y.
  inline bool is_left_equalizer_simple(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = a + 1; b < n; ++b) {
        std::size_t agree = 0;
        for (element_index x = 0; x < n; ++x) {
          agree += s.product(x, a) == s.product(x, b) ? 1 : 0;
        }
        if (agree != 0 && agree != n) {
          return false;
        }
      }
    }
    return true;
  }

  //! theta is the identity relation.
  inline bool is_left_reductive(SemigroupTable const& s) {
    return theta(s).is_identity();
  }

  //! axyb = ayxb.
  inline bool is_medial(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index x = 0; x < n; ++x) {
      for (element_index y = x + 1; y < n; ++y) {
        element_index const xy = s.product(x, y);
        element_index const yx = s.product(y, x);
        if (xy == yx) {
          continue;
        }
        for (element_index a = 0; a < n; ++a) {
          element_index const axy = s.product(a, xy);
          element_index const ayx = s.product(a, yx);
          for (element_index b = 0; b < n; ++b) {
            if (s.product(axy, b) != s.product(ayx, b)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  //! abc = bac.
  inline bool is_left_commutative(SemigroupTable const& s) {
    std::size_t const n = s.order();
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = a + 1; b < n; ++b) {
        element_index const ab = s.product(a, b);
        element_index const ba = s.product(b, a);
        for (element_index c = 0; c < n; ++c) {
          if (s.product(ab, c) != s.product(ba, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  struct PropertyProfile {
    bool right_simple;
    bool left_simple;
    bool simple;
    bool left_cancellative;
    bool right_group;
    bool group;
    bool left_equalizer_simple;
    bool left_reductive;
    bool medial;
    bool left_commutative;
    bool commutative;

    bool operator==(PropertyProfile const&) const = default;
  };

  inline PropertyProfile property_profile(SemigroupTable const& s) {
    PropertyProfile p;
    p.right_simple          = is_right_simple(s);
    p.left_simple           = is_left_simple(s);
    p.simple                = is_simple(s);
    p.left_cancellative     = is_left_cancellative(s);
    p.right_group           = p.left_cancellative && p.right_simple;
    p.group                 = is_group(s);
    p.left_equalizer_simple = is_left_equalizer_simple(s);
    p.left_reductive        = is_left_reductive(s);
    p.medial                = is_medial(s);
    p.left_commutative      = is_left_commutative(s);
    p.commutative           = is_commutative(s);
    return p;
  }

}  // namespace rees_lab

#endif  // REES_LAB_PREDICATES_HPP_
