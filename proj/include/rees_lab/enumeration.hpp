// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// This file contains two independent enumerations of the semigroups of a
// given order up to isomorphism: an exhaustive filter over every table (only
// practical for n <= 3), and a cell-by-cell backtracking search with
// incremental associativity pruning.

#ifndef REES_LAB_ENUMERATION_HPP_
#define REES_LAB_ENUMERATION_HPP_

#include <algorithm>  // for sort, unique
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <exception>  // for exception_ptr, rethrow_exception
#include <iterator>   // for make_move_iterator
#include <thread>     // for thread
#include <vector>     // for vector

#include "exception.hpp"
#include "isomorphism.hpp"
#include "table.hpp"

namespace rees_lab {

  //! Pairwise non-isomorphic canonical tables of one order, sorted.
  struct Corpus {
    std::size_t                 order;
    std::vector<SemigroupTable> members;
  };

  namespace detail {
    inline Corpus make_corpus(std::size_t n, std::vector<SemigroupTable> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return Corpus{n, std::move(v)};
    }
  }  // namespace detail

  inline constexpr std::size_t naive_enumeration_max_order = 3;

  //! Filters all n^(n^2) tables by associativity and deduplicates by
  //! canonical form.
  inline Corpus enumerate_naive(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("the order must be at least 1");
    }
    if (n > naive_enumeration_max_order) {
      throw InvalidArgument("order " + std::to_string(n)
                            + " is too large for naive enumeration");
    }
    std::size_t const            cells = n * n;
    std::vector<element_index>   t(cells, 0);
    std::vector<SemigroupTable>  found;
    while (true) {
      if (!detail::first_nonassociative_triple(n, t)) {
        found.push_back(canonical_form(SemigroupTable::make_nc(n, t)));
      }
      std::size_t c = cells;
      while (c > 0 && t[c - 1] == n - 1) {
        t[--c] = 0;
      }
      if (c == 0) {
        break;
      }
      ++t[c - 1];
    }
    return detail::make_corpus(n, std::move(found));
  }

  struct BacktrackOptions {
    std::size_t   jobs        = 1;
    std::uint64_t node_budget = 200'000'000;
  };

  namespace detail {
    class TableBacktracker {
     public:
      TableBacktracker(std::size_t                 n,
                       std::atomic<std::uint64_t>& nodes,
                       std::uint64_t               budget)
          : _n(n), _t(n * n, unset()), _nodes(nodes), _budget(budget) {}

      // Fills every cell after the first row, which the caller has fixed.
      void run(std::vector<element_index> const& first_row) {
        for (element_index j = 0; j < _n; ++j) {
          _t[j] = first_row[j];
        }
        if (partial_consistent()) {
          fill(_n);
        }
      }

      std::vector<SemigroupTable>& found() {
        return _found;
      }

     private:
      static constexpr element_index unset() {
        return static_cast<element_index>(-1);
      }

      element_index at(element_index i, element_index j) const {
        return _t[i * _n + j];
      }

      // Every triple whose four cells are filled is associative.
      bool partial_consistent() const {
        for (element_index i = 0; i < _n; ++i) {
          for (element_index j = 0; j < _n; ++j) {
            element_index const ij = at(i, j);
            if (ij == unset()) {
              continue;
            }
            for (element_index k = 0; k < _n; ++k) {
              element_index const jk = at(j, k);
              if (jk == unset()) {
                continue;
              }
              element_index const lhs = at(ij, k);
              element_index const rhs = at(i, jk);
              if (lhs != unset() && rhs != unset() && lhs != rhs) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        if (++_nodes > _budget) {
          throw BudgetExceeded("enumeration node budget of "
                               + std::to_string(_budget) + " exceeded");
        }
        if (cell == _t.size()) {
          auto table = SemigroupTable::make_nc(_n, _t);
          // Keep only the lexicographically least member of each class.
          if (canonical_form(table) == table) {
            _found.push_back(std::move(table));
          }
          return;
        }
        for (element_index v = 0; v < _n; ++v) {
          _t[cell] = v;
          if (partial_consistent()) {
            fill(cell + 1);
          }
        }
        _t[cell] = unset();
      }

      std::size_t                 _n;
      std::vector<element_index>  _t;
      std::atomic<std::uint64_t>& _nodes;
      std::uint64_t               _budget;
      std::vector<SemigroupTable> _found;
    };
  }  // namespace detail

  //! Backtracking enumeration. The n^n possible first rows are split into
  //! contiguous blocks, one per worker; the results are merged and sorted, so
  //! the corpus does not depend on the number of jobs.
  inline Corpus enumerate_backtracking(std::size_t             n,
                                       BacktrackOptions const& opts = {}) {
    if (n == 0) {
      throw InvalidArgument("the order must be at least 1");
    }
    std::vector<std::vector<element_index>> first_rows;
    std::vector<element_index>              row(n, 0);
    while (true) {
      first_rows.push_back(row);
      std::size_t c = n;
      while (c > 0 && row[c - 1] == n - 1) {
        row[--c] = 0;
      }
      if (c == 0) {
        break;
      }
      ++row[c - 1];
    }

    std::size_t const jobs = std::max<std::size_t>(
        1, std::min(opts.jobs, first_rows.size()));
    std::atomic<std::uint64_t>               nodes{0};
    std::vector<std::vector<SemigroupTable>> per_job(jobs);
    std::vector<std::exception_ptr>          errors(jobs);

    auto work = [&](std::size_t job) {
      try {
        std::size_t const lo = first_rows.size() * job / jobs;
        std::size_t const hi = first_rows.size() * (job + 1) / jobs;
        for (std::size_t r = lo; r < hi; ++r) {
          detail::TableBacktracker bt(n, nodes, opts.node_budget);
          bt.run(first_rows[r]);
          auto& f = bt.found();
          per_job[job].insert(per_job[job].end(),
                              std::make_move_iterator(f.begin()),
                              std::make_move_iterator(f.end()));
        }
      } catch (...) {
        errors[job] = std::current_exception();
      }
    };

    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t j = 0; j < jobs; ++j) {
        threads.emplace_back(work, j);
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }

    std::vector<SemigroupTable> all;
    for (auto& v : per_job) {
      all.insert(all.end(),
                 std::make_move_iterator(v.begin()),
                 std::make_move_iterator(v.end()));
    }
    return detail::make_corpus(n, std::move(all));
  }

}  // namespace rees_lab

#endif  // REES_LAB_ENUMERATION_HPP_
