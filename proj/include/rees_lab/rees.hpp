// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#ifndef REES_LAB_REES_HPP_
#define REES_LAB_REES_HPP_

#include <cstddef>  // for size_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "exception.hpp"
#include "table.hpp"

namespace rees_lab {

  //! Labels the pair (s, lambda) of a Rees matrix semigroup with a single row
  //! index by the flat index s * lambda_size + lambda.
  class ReesLabeling {
   public:
    ReesLabeling(std::size_t base_order, std::size_t lambda_size)
        : _base_order(base_order), _lambda_size(lambda_size) {
      if (base_order == 0 || lambda_size == 0) {
        throw InvalidArgument("Rees labeling needs |A| >= 1 and |Lambda| >= 1");
      }
    }

    [[nodiscard]] std::size_t base_order() const noexcept {
      return _base_order;
    }

    [[nodiscard]] std::size_t lambda_size() const noexcept {
      return _lambda_size;
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _base_order * _lambda_size;
    }

    [[nodiscard]] element_index encode(element_index s,
                                       std::size_t   lambda) const noexcept {
      return s * _lambda_size + lambda;
    }

    [[nodiscard]] std::pair<element_index, std::size_t>
    decode(element_index flat) const noexcept {
      return {flat / _lambda_size, flat % _lambda_size};
    }

    bool operator==(ReesLabeling const&) const = default;

   private:
    std::size_t _base_order;
    std::size_t _lambda_size;
  };

  struct ReesMatrixSemigroup {
    SemigroupTable table;
    ReesLabeling   labeling;
  };

  //! M(A; Lambda; P) with |I| = 1, where (s, l)(t, m) = (s P(l) t, m).
  inline ReesMatrixSemigroup rees_matrix(SemigroupTable const& a,
                                         std::size_t           lambda_size,
                                         ElementMapping const& p) {
    if (p.domain_size() != lambda_size) {
      throw InvalidArgument("sandwich mapping has domain size "
                            + std::to_string(p.domain_size()) + ", expected "
                            + std::to_string(lambda_size));
    }
    if (p.codomain_order() != a.order()) {
      throw InvalidArgument("sandwich mapping targets a semigroup of order "
                            + std::to_string(p.codomain_order())
                            + ", expected " + std::to_string(a.order()));
    }
    ReesLabeling const lab(a.order(), lambda_size);
    std::size_t const  n = lab.order();
    std::vector<element_index> cells(n * n);
    for (element_index x = 0; x < n; ++x) {
      auto const [s, l] = lab.decode(x);
      element_index const sp = a.product(s, p[l]);
      for (element_index y = 0; y < n; ++y) {
        auto const [t, m] = lab.decode(y);
        cells[x * n + y] = lab.encode(a.product(sp, t), m);
      }
    }
    return {SemigroupTable::make_nc(n, std::move(cells)), lab};
  }

  //! (s, lambda) |-> lambda, a homomorphism onto right_zero(lambda_size).
  inline ElementMapping rees_column_projection(ReesLabeling const& lab) {
    std::vector<element_index> im(lab.order());
    for (element_index x = 0; x < im.size(); ++x) {
      im[x] = lab.decode(x).second;
    }
    return ElementMapping(std::move(im), lab.lambda_size());
  }

}  // namespace rees_lab

#endif  // REES_LAB_REES_HPP_
