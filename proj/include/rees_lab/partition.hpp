// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

#ifndef REES_LAB_PARTITION_HPP_
#define REES_LAB_PARTITION_HPP_

#include <cstddef>  // for size_t
#include <map>      // for map
#include <utility>  // for move
#include <vector>   // for vector

#include "exception.hpp"
#include "table.hpp"

namespace rees_lab {

  //! An equivalence relation on {0, ..., n - 1}, stored as the map sending
  //! each element to the least member of its class.
  class Partition {
   public:
    //! Normalizes arbitrary class labels: i and j are related iff
    //! labels[i] == labels[j].
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels) {
      std::map<Label, element_index> first;
      std::vector<element_index>     rep(labels.size());
      for (element_index i = 0; i < labels.size(); ++i) {
        rep[i] = first.try_emplace(labels[i], i).first->second;
      }
      return Partition(std::move(rep));
    }

    //! Checks the normalization invariants of \p class_of.
    static Partition make(std::vector<element_index> class_of) {
      for (element_index i = 0; i < class_of.size(); ++i) {
        if (class_of[i] > i || class_of[class_of[i]] != class_of[i]) {
          throw InvalidArgument("class_of[" + std::to_string(i)
                                + "] is not the least member of its class");
        }
      }
      return Partition(std::move(class_of));
    }

    static Partition identity(std::size_t n) {
      std::vector<element_index> rep(n);
      for (element_index i = 0; i < n; ++i) {
        rep[i] = i;
      }
      return Partition(std::move(rep));
    }

    static Partition universal(std::size_t n) {
      return Partition(std::vector<element_index>(n, 0));
    }

    //! The partition whose classes are given; every element must appear in
    //! exactly one class.
    static Partition from_classes(std::size_t n,
                                  std::vector<std::vector<element_index>> const&
                                      classes) {
      std::vector<std::size_t> label(n, n);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (auto x : classes[c]) {
          if (x >= n || label[x] != n) {
            throw InvalidArgument("classes do not partition the carrier");
          }
          label[x] = c;
        }
      }
      for (auto l : label) {
        if (l == n) {
          throw InvalidArgument("classes do not partition the carrier");
        }
      }
      return from_labels(label);
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _class_of.size();
    }

    [[nodiscard]] element_index class_of(element_index i) const noexcept {
      return _class_of[i];
    }

    [[nodiscard]] std::vector<element_index> const& class_map() const noexcept {
      return _class_of;
    }

    [[nodiscard]] bool contains(element_index a, element_index b) const {
      return _class_of[a] == _class_of[b];
    }

    //! Class representatives in increasing order.
    [[nodiscard]] std::vector<element_index> representatives() const {
      std::vector<element_index> out;
      for (element_index i = 0; i < size(); ++i) {
        if (_class_of[i] == i) {
          out.push_back(i);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t number_of_classes() const {
      return representatives().size();
    }

    //! Classes ordered by representative, members increasing.
    [[nodiscard]] std::vector<std::vector<element_index>> classes() const {
      std::vector<std::vector<element_index>> out;
      std::vector<std::size_t>                slot(size());
      for (element_index i = 0; i < size(); ++i) {
        if (_class_of[i] == i) {
          slot[i] = out.size();
          out.emplace_back();
        }
        out[slot[_class_of[i]]].push_back(i);
      }
      return out;
    }

    [[nodiscard]] bool is_identity() const {
      for (element_index i = 0; i < size(); ++i) {
        if (_class_of[i] != i) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_universal() const {
      for (auto r : _class_of) {
        if (r != 0) {
          return false;
        }
      }
      return true;
    }

    //! true iff this relation is contained in \p that (as sets of pairs).
    [[nodiscard]] bool is_subset_of(Partition const& that) const {
      if (that.size() != size()) {
        throw InvalidArgument("partitions of different carriers");
      }
      for (element_index i = 0; i < size(); ++i) {
        if (!that.contains(i, _class_of[i])) {
          return false;
        }
      }
      return true;
    }

    bool operator==(Partition const&) const = default;

   private:
    explicit Partition(std::vector<element_index> class_of)
        : _class_of(std::move(class_of)) {}

    std::vector<element_index> _class_of;
  };

}  // namespace rees_lab

#endif  // REES_LAB_PARTITION_HPP_
