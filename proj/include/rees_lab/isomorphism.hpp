// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// This file contains relabeling invariants, isomorphism search and canonical
// forms for small multiplication tables.

#ifndef REES_LAB_ISOMORPHISM_HPP_
#define REES_LAB_ISOMORPHISM_HPP_

#include <algorithm>  // for sort
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <utility>    // for pair
#include <vector>     // for vector

#include "exception.hpp"
#include "table.hpp"

namespace rees_lab {

  //! Properties of a single element that every isomorphism preserves.
  struct ElementInvariant {
    bool        idempotent;
    std::size_t right_ideal_size;  // |aS|
    std::size_t left_ideal_size;   // |Sa|
    std::size_t index;             // least m with a^m = a^(m + period)
    std::size_t period;
    std::vector<std::size_t> row_histogram;     // sorted value counts of row a
    std::vector<std::size_t> column_histogram;  // same for column a

    auto operator<=>(ElementInvariant const&) const = default;
    bool operator==(ElementInvariant const&) const  = default;
  };

  namespace detail {
    inline std::vector<std::size_t> sorted_counts(std::size_t n,
                                                  auto&&      value_at) {
      std::vector<std::size_t> count(n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        ++count[value_at(k)];
      }
      std::vector<std::size_t> out;
      for (auto c : count) {
        if (c != 0) {
          out.push_back(c);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  inline ElementInvariant element_invariant(SemigroupTable const& s,
                                            element_index         a) {
    std::size_t const n = s.order();
    ElementInvariant  inv;
    inv.idempotent = s.product(a, a) == a;

    std::vector<bool> seen_r(n, false), seen_l(n, false);
    inv.right_ideal_size = 0;
    inv.left_ideal_size  = 0;
    for (element_index x = 0; x < n; ++x) {
      if (!seen_r[s.product(a, x)]) {
        seen_r[s.product(a, x)] = true;
        ++inv.right_ideal_size;
      }
      if (!seen_l[s.product(x, a)]) {
        seen_l[s.product(x, a)] = true;
        ++inv.left_ideal_size;
      }
    }

    // Powers a^1, a^2, ... until the first repeat.
    std::vector<std::size_t> first_exponent(n, 0);
    element_index            power = a;
    for (std::size_t m = 1;; ++m) {
      if (first_exponent[power] != 0) {
        inv.index  = first_exponent[power];
        inv.period = m - first_exponent[power];
        break;
      }
      first_exponent[power] = m;
      power                 = s.product(power, a);
    }

    inv.row_histogram
        = detail::sorted_counts(n, [&](std::size_t k) { return s.product(a, k); });
    inv.column_histogram
        = detail::sorted_counts(n, [&](std::size_t k) { return s.product(k, a); });
    return inv;
  }

  inline std::vector<ElementInvariant>
  element_invariants(SemigroupTable const& s) {
    std::vector<ElementInvariant> out;
    out.reserve(s.order());
    for (element_index a = 0; a < s.order(); ++a) {
      out.push_back(element_invariant(s, a));
    }
    return out;
  }

  //! A relabeling-invariant summary; equal fingerprints are necessary (not
  //! sufficient) for isomorphism.
  struct Fingerprint {
    std::size_t                           order;
    std::size_t                           idempotent_count;
    std::vector<ElementInvariant>         elements;  // sorted
    std::vector<std::vector<std::size_t>> row_histograms;     // sorted
    std::vector<std::vector<std::size_t>> column_histograms;  // sorted

    bool operator==(Fingerprint const&) const = default;
  };

  inline Fingerprint fingerprint(SemigroupTable const& s) {
    Fingerprint fp;
    fp.order            = s.order();
    fp.elements         = element_invariants(s);
    fp.idempotent_count = 0;
    for (auto const& e : fp.elements) {
      fp.idempotent_count += e.idempotent ? 1 : 0;
      fp.row_histograms.push_back(e.row_histogram);
      fp.column_histograms.push_back(e.column_histogram);
    }
    std::sort(fp.elements.begin(), fp.elements.end());
    std::sort(fp.row_histograms.begin(), fp.row_histograms.end());
    std::sort(fp.column_histograms.begin(), fp.column_histograms.end());
    return fp;
  }

  //! A bijection f between carriers with f(ij) = f(i)f(j).
  using IsoWitness = std::vector<element_index>;

  //! true iff \p f is a bijection from \p s onto \p t preserving products.
  inline bool is_isomorphism(SemigroupTable const& s,
                             SemigroupTable const& t,
                             IsoWitness const&     f) {
    std::size_t const n = s.order();
    if (t.order() != n || f.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto y : f) {
      if (y >= n || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        if (f[s.product(i, j)] != t.product(f[i], f[j])) {
          return false;
        }
      }
    }
    return true;
  }

  //! The table t with t(f(a), f(b)) = f(s(a, b)), where f is a bijection.
  inline SemigroupTable relabel(SemigroupTable const& s, IsoWitness const& f) {
    std::size_t const n = s.order();
    if (f.size() != n) {
      throw InvalidArgument("relabeling has the wrong length");
    }
    std::vector<bool> hit(n, false);
    for (auto y : f) {
      if (y >= n || hit[y]) {
        throw InvalidArgument("relabeling is not a bijection");
      }
      hit[y] = true;
    }
    std::vector<element_index> cells(n * n);
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        cells[f[a] * n + f[b]] = f[s.product(a, b)];
      }
    }
    return SemigroupTable::make_nc(n, std::move(cells));
  }

  namespace detail {
    class IsoSearch {
     public:
      IsoSearch(SemigroupTable const& s, SemigroupTable const& t)
          : _s(s),
            _t(t),
            _n(s.order()),
            _f(_n, unset()),
            _g(_n, unset()),
            _candidates(_n),
            _factorizations(_n) {
        for (element_index x = 0; x < _n; ++x) {
          for (element_index y = 0; y < _n; ++y) {
            _factorizations[s.product(x, y)].emplace_back(x, y);
          }
        }
        auto const inv_s = element_invariants(s);
        auto const inv_t = element_invariants(t);
        for (element_index a = 0; a < _n; ++a) {
          for (element_index y = 0; y < _n; ++y) {
            if (inv_s[a] == inv_t[y]) {
              _candidates[a].push_back(y);
            }
          }
        }
      }

      std::optional<IsoWitness> run() {
        if (extend(0)) {
          return _f;
        }
        return std::nullopt;
      }

     private:
      static constexpr element_index unset() {
        return static_cast<element_index>(-1);
      }

      // Checks every product among {0, ..., i} that involves i, either as a
      // factor or as the product itself.
      bool consistent(element_index i) const {
        for (element_index j = 0; j <= i; ++j) {
          if (!consistent_pair(i, j) || !consistent_pair(j, i)) {
            return false;
          }
        }
        for (auto [x, y] : _factorizations[i]) {
          if (x <= i && y <= i && !consistent_pair(x, y)) {
            return false;
          }
        }
        return true;
      }

      bool consistent_pair(element_index x, element_index y) const {
        element_index const p      = _s.product(x, y);
        element_index const target = _t.product(_f[x], _f[y]);
        if (_f[p] != unset()) {
          return _f[p] == target;
        }
        // p is not yet placed, so target must still be free.
        return _g[target] == unset();
      }

      bool extend(element_index i) {
        if (i == _n) {
          return true;
        }
        for (auto y : _candidates[i]) {
          if (_g[y] != unset()) {
            continue;
          }
          _f[i] = y;
          _g[y] = i;
          if (consistent(i) && extend(i + 1)) {
            return true;
          }
          _f[i] = unset();
          _g[y] = unset();
        }
        return false;
      }

      SemigroupTable const&                   _s;
      SemigroupTable const&                   _t;
      std::size_t                             _n;
      std::vector<element_index>              _f;
      std::vector<element_index>              _g;
      std::vector<std::vector<element_index>> _candidates;
      std::vector<std::vector<std::pair<element_index, element_index>>>
          _factorizations;
    };
  }  // namespace detail

  //! Returns the lexicographically least isomorphism from \p s to \p t, if
  //! any. Tables with different fingerprints are rejected without search.
  inline std::optional<IsoWitness> find_isomorphism(SemigroupTable const& s,
                                                    SemigroupTable const& t) {
    if (s.order() != t.order() || fingerprint(s) != fingerprint(t)) {
      return std::nullopt;
    }
    auto result = detail::IsoSearch(s, t).run();
    if (result && !is_isomorphism(s, t, *result)) {
      throw Exception("internal error: invalid isomorphism witness");
    }
    return result;
  }

  inline bool are_isomorphic(SemigroupTable const& s, SemigroupTable const& t) {
    return find_isomorphism(s, t).has_value();
  }

  namespace detail {
    // Branch and bound over relabelings. new_of[old] and old_of[new] are
    // built one new label at a time; a partial relabeling is abandoned as
    // soon as the determined prefix of row 0 of the relabeled table exceeds
    // the best complete table found so far.
    class CanonicalSearch {
     public:
      explicit CanonicalSearch(SemigroupTable const& s)
          : _s(s),
            _n(s.order()),
            _new_of(_n, unset()),
            _old_of(_n, unset()) {}

      SemigroupTable run() {
        descend(0);
        return SemigroupTable::make_nc(_n, std::move(_best));
      }

     private:
      static constexpr element_index unset() {
        return static_cast<element_index>(-1);
      }

      // -1: strictly below best, 0: undecided, 1: cannot beat best.
      int compare_prefix(std::size_t k) const {
        if (_best.empty()) {
          return -1;
        }
        element_index const r = _old_of[0];
        for (element_index b = 0; b < k; ++b) {
          element_index const p     = _s.product(r, _old_of[b]);
          element_index const known = _new_of[p];
          element_index const best  = _best[b];
          if (known == unset()) {
            // The eventual label of p is at least k.
            return best < k ? 1 : 0;
          }
          if (known != best) {
            return known < best ? -1 : 1;
          }
        }
        return 0;
      }

      void descend(std::size_t k) {
        if (k == _n) {
          std::vector<element_index> cells(_n * _n);
          for (element_index a = 0; a < _n; ++a) {
            for (element_index b = 0; b < _n; ++b) {
              cells[a * _n + b]
                  = _new_of[_s.product(_old_of[a], _old_of[b])];
            }
          }
          if (_best.empty() || cells < _best) {
            _best = std::move(cells);
          }
          return;
        }
        for (element_index old = 0; old < _n; ++old) {
          if (_new_of[old] != unset()) {
            continue;
          }
          _new_of[old] = k;
          _old_of[k]   = old;
          if (compare_prefix(k + 1) != 1) {
            descend(k + 1);
          }
          _new_of[old] = unset();
          _old_of[k]   = unset();
        }
      }

      SemigroupTable const&      _s;
      std::size_t                _n;
      std::vector<element_index> _new_of;
      std::vector<element_index> _old_of;
      std::vector<element_index> _best;
    };
  }  // namespace detail

  //! The lexicographically least (row-major) table among all relabelings of
  //! \p s. Two tables are isomorphic iff their canonical forms are equal.
  inline SemigroupTable canonical_form(SemigroupTable const& s) {
    return detail::CanonicalSearch(s).run();
  }

}  // namespace rees_lab

#endif  // REES_LAB_ISOMORPHISM_HPP_
