// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#ifndef REES_LAB_EXCEPTION_HPP_
#define REES_LAB_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string, to_string

namespace rees_lab {

  //! Base class of every exception thrown by rees-lab.
  class Exception : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when a multiplication table is rejected.
  class InvalidTable : public Exception {
   public:
    using Exception::Exception;
  };

  //! An entry of the table lies outside the carrier.
  class NotClosed : public InvalidTable {
   public:
    NotClosed(std::size_t row, std::size_t col)
        : InvalidTable("entry (" + std::to_string(row) + ", "
                       + std::to_string(col) + ") is out of range"),
          _row(row),
          _col(col) {}

    [[nodiscard]] std::size_t row() const noexcept {
      return _row;
    }

    [[nodiscard]] std::size_t col() const noexcept {
      return _col;
    }

   private:
    std::size_t _row;
    std::size_t _col;
  };

  //! (ij)k != i(jk) for the stored triple, the first in lexicographic order.
  class NotAssociative : public InvalidTable {
   public:
    NotAssociative(std::size_t i, std::size_t j, std::size_t k)
        : InvalidTable("(" + std::to_string(i) + " * " + std::to_string(j)
                       + ") * " + std::to_string(k) + " != " + std::to_string(i)
                       + " * (" + std::to_string(j) + " * " + std::to_string(k)
                       + ")"),
          _i(i),
          _j(j),
          _k(k) {}

    [[nodiscard]] std::size_t i() const noexcept {
      return _i;
    }

    [[nodiscard]] std::size_t j() const noexcept {
      return _j;
    }

    [[nodiscard]] std::size_t k() const noexcept {
      return _k;
    }

   private:
    std::size_t _i;
    std::size_t _j;
    std::size_t _k;
  };

  //! Thrown when an argument violates the precondition of an operation.
  class InvalidArgument : public Exception {
   public:
    using Exception::Exception;
  };

  //! Thrown when a table file or mapping specification cannot be parsed.
  class ParseError : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  //! Thrown when a search would exceed its configured budget.
  class BudgetExceeded : public Exception {
   public:
    using Exception::Exception;
  };

}  // namespace rees_lab

#endif  // REES_LAB_EXCEPTION_HPP_
