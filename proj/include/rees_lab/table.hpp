// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// This file contains the SemigroupTable and ElementMapping types, the named
// constructions used throughout the library and tests, direct products, and
// the ideal / homomorphism tests that operate on a single table.

#ifndef REES_LAB_TABLE_HPP_
#define REES_LAB_TABLE_HPP_

#include <algorithm>    // for sort, unique, lexicographical_compare
#include <array>        // for array
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "exception.hpp"

namespace rees_lab {

  using element_index = std::size_t;

  namespace detail {
    // Returns the lexicographically first triple (i, j, k) with
    // (ij)k != i(jk), if any.
    inline std::optional<std::array<element_index, 3>>
    first_nonassociative_triple(std::size_t                    n,
                                std::span<element_index const> cells) {
      for (element_index i = 0; i < n; ++i) {
        for (element_index j = 0; j < n; ++j) {
          element_index const ij = cells[i * n + j];
          for (element_index k = 0; k < n; ++k) {
            if (cells[ij * n + k] != cells[i * n + cells[j * n + k]]) {
              return std::array<element_index, 3>{i, j, k};
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! A validated finite semigroup given by its multiplication table.
  //!
  //! The carrier is {0, ..., n - 1} and `product(i, j)` is the entry in row
  //! `i`, column `j`, i.e. the left factor selects the row. Instances are
  //! immutable once constructed and may be shared freely between threads.
  class SemigroupTable {
   public:
    //! Validates \p raw (which must be an order x order grid) and returns the
    //! table. Throws NotClosed or NotAssociative naming the first offending
    //! cell or triple, and InvalidTable for an empty or malformed grid.
    static SemigroupTable
    make(std::size_t                                  order,
         std::vector<std::vector<std::int64_t>> const& raw) {
      if (order == 0) {
        throw InvalidTable("the empty semigroup is not permitted");
      }
      if (raw.size() != order) {
        throw InvalidTable("expected " + std::to_string(order)
                           + " rows, found " + std::to_string(raw.size()));
      }
      std::vector<element_index> cells;
      cells.reserve(order * order);
      for (std::size_t i = 0; i < order; ++i) {
        if (raw[i].size() != order) {
          throw InvalidTable("row " + std::to_string(i) + " has "
                             + std::to_string(raw[i].size())
                             + " entries, expected " + std::to_string(order));
        }
      }
      for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
          auto const v = raw[i][j];
          if (v < 0 || static_cast<std::size_t>(v) >= order) {
            throw NotClosed(i, j);
          }
          cells.push_back(static_cast<element_index>(v));
        }
      }
      return make(order, std::move(cells));
    }

    //! Validates a row-major cell vector.
    static SemigroupTable make(std::size_t                order,
                               std::vector<element_index> cells) {
      if (order == 0) {
        throw InvalidTable("the empty semigroup is not permitted");
      }
      if (cells.size() != order * order) {
        throw InvalidTable("expected " + std::to_string(order * order)
                           + " cells, found " + std::to_string(cells.size()));
      }
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c] >= order) {
          throw NotClosed(c / order, c % order);
        }
      }
      if (auto t = detail::first_nonassociative_triple(order, cells)) {
        throw NotAssociative((*t)[0], (*t)[1], (*t)[2]);
      }
      return SemigroupTable(order, std::move(cells));
    }

    //! No checks are performed: the caller guarantees closure and
    //! associativity (used by constructions that preserve both).
    static SemigroupTable make_nc(std::size_t                order,
                                  std::vector<element_index> cells) {
      return SemigroupTable(order, std::move(cells));
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] element_index product(element_index a,
                                        element_index b) const noexcept {
      return _cells[a * _order + b];
    }

    [[nodiscard]] element_index product(element_index a,
                                        element_index b,
                                        element_index c) const noexcept {
      return product(product(a, b), c);
    }

    [[nodiscard]] std::span<element_index const> row(element_index a) const {
      return std::span<element_index const>(_cells).subspan(a * _order,
                                                            _order);
    }

    [[nodiscard]] std::span<element_index const> cells() const noexcept {
      return _cells;
    }

    //! Rows as nested vectors, convenient for printing and JSON.
    [[nodiscard]] std::vector<std::vector<element_index>> rows() const {
      std::vector<std::vector<element_index>> out;
      out.reserve(_order);
      for (element_index a = 0; a < _order; ++a) {
        auto r = row(a);
        out.emplace_back(r.begin(), r.end());
      }
      return out;
    }

    bool operator==(SemigroupTable const&) const = default;

    //! Orders by size first, then lexicographically by row-major cells.
    std::strong_ordering operator<=>(SemigroupTable const& that) const {
      if (auto c = _order <=> that._order; c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(_cells.begin(),
                                                    _cells.end(),
                                                    that._cells.begin(),
                                                    that._cells.end());
    }

   private:
    SemigroupTable(std::size_t order, std::vector<element_index> cells)
        : _order(order), _cells(std::move(cells)) {}

    std::size_t                _order;
    std::vector<element_index> _cells;
  };

  //! Validates an order x order grid of integers.
  inline SemigroupTable
  validate_table(std::size_t                                  order,
                 std::vector<std::vector<std::int64_t>> const& raw) {
    return SemigroupTable::make(order, raw);
  }

  //! A map from the index set {0, ..., domain_size - 1} into the carrier of a
  //! semigroup of order codomain_order. Sandwich mappings, homomorphisms and
  //! projections are all represented this way.
  class ElementMapping {
   public:
    ElementMapping(std::vector<element_index> images,
                   std::size_t                codomain_order)
        : _images(std::move(images)), _codomain_order(codomain_order) {
      for (std::size_t k = 0; k < _images.size(); ++k) {
        if (_images[k] >= _codomain_order) {
          throw InvalidArgument("image " + std::to_string(_images[k])
                                + " of " + std::to_string(k)
                                + " is outside a codomain of order "
                                + std::to_string(_codomain_order));
        }
      }
    }

    static ElementMapping identity(std::size_t n) {
      std::vector<element_index> im(n);
      for (element_index k = 0; k < n; ++k) {
        im[k] = k;
      }
      return ElementMapping(std::move(im), n);
    }

    static ElementMapping constant(std::size_t   domain_size,
                                   element_index value,
                                   std::size_t   codomain_order) {
      return ElementMapping(std::vector<element_index>(domain_size, value),
                            codomain_order);
    }

    [[nodiscard]] std::size_t domain_size() const noexcept {
      return _images.size();
    }

    [[nodiscard]] std::size_t codomain_order() const noexcept {
      return _codomain_order;
    }

    [[nodiscard]] element_index operator[](std::size_t k) const noexcept {
      return _images[k];
    }

    [[nodiscard]] std::vector<element_index> const& images() const noexcept {
      return _images;
    }

    //! Sorted, duplicate free image set.
    [[nodiscard]] std::vector<element_index> image_set() const {
      std::vector<element_index> out(_images);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    [[nodiscard]] bool is_surjective() const {
      return image_set().size() == _codomain_order;
    }

    //! x |-> that[this[x]].
    [[nodiscard]] ElementMapping then(ElementMapping const& that) const {
      if (that.domain_size() != _codomain_order) {
        throw InvalidArgument("cannot compose mappings: codomain of order "
                              + std::to_string(_codomain_order)
                              + " vs domain of size "
                              + std::to_string(that.domain_size()));
      }
      std::vector<element_index> im(_images.size());
      for (std::size_t k = 0; k < im.size(); ++k) {
        im[k] = that[_images[k]];
      }
      return ElementMapping(std::move(im), that.codomain_order());
    }

    bool operator==(ElementMapping const&) const = default;

   private:
    std::vector<element_index> _images;
    std::size_t                _codomain_order;
  };

  namespace named {
    //! ab = a.
    inline SemigroupTable left_zero(std::size_t n) {
      std::vector<element_index> cells(n * n);
      for (element_index i = 0; i < n; ++i) {
        for (element_index j = 0; j < n; ++j) {
          cells[i * n + j] = i;
        }
      }
      return SemigroupTable::make_nc(n, std::move(cells));
    }

    //! ab = b.
    inline SemigroupTable right_zero(std::size_t n) {
      std::vector<element_index> cells(n * n);
      for (element_index i = 0; i < n; ++i) {
        for (element_index j = 0; j < n; ++j) {
          cells[i * n + j] = j;
        }
      }
      return SemigroupTable::make_nc(n, std::move(cells));
    }

    inline SemigroupTable cyclic_group(std::size_t n) {
      std::vector<element_index> cells(n * n);
      for (element_index i = 0; i < n; ++i) {
        for (element_index j = 0; j < n; ++j) {
          cells[i * n + j] = (i + j) % n;
        }
      }
      return SemigroupTable::make_nc(n, std::move(cells));
    }

    inline SemigroupTable trivial() {
      return SemigroupTable::make_nc(1, {0});
    }

    //! Every product is 0.
    inline SemigroupTable null_semigroup(std::size_t n) {
      return SemigroupTable::make_nc(n, std::vector<element_index>(n * n, 0));
    }

    //! The two element semilattice {0 < 1}: 0 is a zero, 1 an identity.
    inline SemigroupTable semilattice2() {
      return SemigroupTable::make_nc(2, {0, 0, 0, 1});
    }

    //! The right zero semigroup {1, 2} with an identity 0 adjoined. Neither
    //! medial nor left commutative.
    inline SemigroupTable flipflop3() {
      return SemigroupTable::make_nc(3, {0, 1, 2, 1, 1, 2, 2, 1, 2});
    }
  }  // namespace named

  //! The names accepted by named_table.
  inline std::vector<std::string> const& named_table_names() {
    static std::vector<std::string> const names = {"left_zero",
                                                   "right_zero",
                                                   "cyclic_group",
                                                   "trivial",
                                                   "null",
                                                   "semilattice2",
                                                   "flipflop3"};
    return names;
  }

  //! Looks up a named construction. Fixed-size names accept an omitted \p n
  //! or the matching order; the families require n >= 1.
  inline SemigroupTable named_table(std::string_view           name,
                                    std::optional<std::size_t> n = {}) {
    auto fixed = [&](std::size_t order, SemigroupTable (*fn)()) {
      if (n && *n != order) {
        throw InvalidArgument(std::string(name) + " has order "
                              + std::to_string(order) + ", not "
                              + std::to_string(*n));
      }
      return fn();
    };
    auto family = [&](SemigroupTable (*fn)(std::size_t)) {
      if (!n || *n == 0) {
        throw InvalidArgument(std::string(name)
                              + " requires an order n >= 1");
      }
      return fn(*n);
    };
    if (name == "left_zero") {
      return family(named::left_zero);
    } else if (name == "right_zero") {
      return family(named::right_zero);
    } else if (name == "cyclic_group") {
      return family(named::cyclic_group);
    } else if (name == "null") {
      return family(named::null_semigroup);
    } else if (name == "trivial") {
      return fixed(1, named::trivial);
    } else if (name == "semilattice2") {
      return fixed(2, named::semilattice2);
    } else if (name == "flipflop3") {
      return fixed(3, named::flipflop3);
    }
    throw InvalidArgument("unknown named table \"" + std::string(name) + "\"");
  }

  //! The pair (s, t) is the element s * |T| + t.
  inline SemigroupTable direct_product(SemigroupTable const& s,
                                       SemigroupTable const& t) {
    std::size_t const m = t.order();
    std::size_t const n = s.order() * m;
    std::vector<element_index> cells(n * n);
    for (element_index x = 0; x < n; ++x) {
      for (element_index y = 0; y < n; ++y) {
        cells[x * n + y] = s.product(x / m, y / m) * m + t.product(x % m, y % m);
      }
    }
    return SemigroupTable::make_nc(n, std::move(cells));
  }

  //! Projections of direct_product(s, t) onto its factors.
  inline ElementMapping product_projection_left(SemigroupTable const& s,
                                                SemigroupTable const& t) {
    std::vector<element_index> im(s.order() * t.order());
    for (element_index x = 0; x < im.size(); ++x) {
      im[x] = x / t.order();
    }
    return ElementMapping(std::move(im), s.order());
  }

  inline ElementMapping product_projection_right(SemigroupTable const& s,
                                                 SemigroupTable const& t) {
    std::vector<element_index> im(s.order() * t.order());
    for (element_index x = 0; x < im.size(); ++x) {
      im[x] = x % t.order();
    }
    return ElementMapping(std::move(im), t.order());
  }

  //! true iff f(xy) = f(x)f(y) for all x, y in \p s.
  inline bool is_homomorphism(SemigroupTable const& s,
                              SemigroupTable const& t,
                              ElementMapping const& f) {
    if (f.domain_size() != s.order() || f.codomain_order() != t.order()) {
      throw InvalidArgument("mapping does not go from a semigroup of order "
                            + std::to_string(s.order()) + " to one of order "
                            + std::to_string(t.order()));
    }
    for (element_index x = 0; x < s.order(); ++x) {
      for (element_index y = 0; y < s.order(); ++y) {
        if (f[s.product(x, y)] != t.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace detail {
    inline std::vector<element_index>
    normalize_subset(SemigroupTable const&       s,
                     std::vector<element_index> subset) {
      if (subset.empty()) {
        throw InvalidArgument("the subset must be nonempty");
      }
      std::sort(subset.begin(), subset.end());
      subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
      if (subset.back() >= s.order()) {
        throw InvalidArgument("subset element " + std::to_string(subset.back())
                              + " is outside a semigroup of order "
                              + std::to_string(s.order()));
      }
      return subset;
    }

    inline std::vector<bool> membership(std::size_t                       n,
                                        std::vector<element_index> const& sub) {
      std::vector<bool> in(n, false);
      for (auto x : sub) {
        in[x] = true;
      }
      return in;
    }
  }  // namespace detail

  //! true iff S * I and I * S are both contained in I.
  inline bool is_ideal(SemigroupTable const&      s,
                       std::vector<element_index> subset) {
    subset  = detail::normalize_subset(s, std::move(subset));
    auto in = detail::membership(s.order(), subset);
    for (auto i : subset) {
      for (element_index x = 0; x < s.order(); ++x) {
        if (!in[s.product(x, i)] || !in[s.product(i, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  //! A subsemigroup relabeled as {0, ..., k - 1}; element r of the table is
  //! elements[r] of the parent.
  struct Subsemigroup {
    SemigroupTable             table;
    std::vector<element_index> elements;

    //! Position of a parent element, which must belong to the subsemigroup.
    [[nodiscard]] element_index index_of(element_index x) const {
      auto it = std::lower_bound(elements.begin(), elements.end(), x);
      if (it == elements.end() || *it != x) {
        throw InvalidArgument(std::to_string(x)
                              + " is not in the subsemigroup");
      }
      return static_cast<element_index>(it - elements.begin());
    }
  };

  //! Throws InvalidArgument if \p subset is not closed under multiplication.
  inline Subsemigroup induced_subsemigroup(SemigroupTable const&      s,
                                           std::vector<element_index> subset) {
    subset = detail::normalize_subset(s, std::move(subset));
    std::size_t const          k = subset.size();
    std::vector<element_index> rank(s.order(), s.order());
    for (element_index r = 0; r < k; ++r) {
      rank[subset[r]] = r;
    }
    std::vector<element_index> cells(k * k);
    for (element_index a = 0; a < k; ++a) {
      for (element_index b = 0; b < k; ++b) {
        auto p = rank[s.product(subset[a], subset[b])];
        if (p == s.order()) {
          throw InvalidArgument("the subset is not closed under "
                                "multiplication");
        }
        cells[a * k + b] = p;
      }
    }
    return {SemigroupTable::make_nc(k, std::move(cells)), std::move(subset)};
  }

  //! true iff \p phi is an endomorphism of \p s with image inside the ideal
  //! \p ideal_subset fixing each of its elements. Throws InvalidArgument if
  //! \p ideal_subset is not an ideal.
  inline bool is_retract_homomorphism(SemigroupTable const&      s,
                                      std::vector<element_index> ideal_subset,
                                      ElementMapping const&      phi) {
    ideal_subset = detail::normalize_subset(s, std::move(ideal_subset));
    if (!is_ideal(s, ideal_subset)) {
      throw InvalidArgument("the subset is not an ideal");
    }
    if (!is_homomorphism(s, s, phi)) {
      return false;
    }
    auto in = detail::membership(s.order(), ideal_subset);
    for (element_index x = 0; x < s.order(); ++x) {
      if (!in[phi[x]]) {
        return false;
      }
    }
    for (auto x : ideal_subset) {
      if (phi[x] != x) {
        return false;
      }
    }
    return true;
  }

}  // namespace rees_lab

#endif  // REES_LAB_TABLE_HPP_
