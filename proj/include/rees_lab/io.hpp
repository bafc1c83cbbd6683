// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// Text formats.
//
// A table file holds the order n on its first line followed by n lines of n
// space separated integers in [0, n); the entry in row i, column j is the
// product i * j. Lines whose first non-blank character is '#' are comments,
// and blank lines are ignored. write_table emits the normalized form: no
// comments unless requested, single spaces, one trailing newline.
//
// A mapping specification is a comma separated list of images, "0,2,1"
// meaning 0 |-> 0, 1 |-> 2, 2 |-> 1.

#ifndef REES_LAB_IO_HPP_
#define REES_LAB_IO_HPP_

#include <charconv>     // for from_chars
#include <cstdint>      // for int64_t
#include <fstream>      // for ifstream, ofstream
#include <optional>     // for optional
#include <sstream>      // for istringstream, ostringstream
#include <string>       // for string, getline
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "exception.hpp"
#include "table.hpp"

namespace rees_lab {

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    inline std::int64_t parse_integer(std::string_view token,
                                      std::size_t      line) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line) + ": \""
                         + std::string(token) + "\" is not an integer");
      }
      return value;
    }

    inline std::vector<std::int64_t> split_integers(std::string_view s,
                                                    std::size_t      line) {
      std::vector<std::int64_t> out;
      std::size_t               pos = 0;
      while (true) {
        pos = s.find_first_not_of(" \t\r", pos);
        if (pos == std::string_view::npos) {
          break;
        }
        auto end = s.find_first_of(" \t\r", pos);
        if (end == std::string_view::npos) {
          end = s.size();
        }
        out.push_back(parse_integer(s.substr(pos, end - pos), line));
        pos = end;
      }
      return out;
    }
  }  // namespace detail

  //! Parses and validates the contents of a table file.
  inline SemigroupTable parse_table(std::string_view text) {
    std::istringstream                     in{std::string(text)};
    std::string                            line;
    std::size_t                            line_no = 0;
    std::optional<std::size_t>             order;
    std::vector<std::vector<std::int64_t>> rows;
    while (std::getline(in, line)) {
      ++line_no;
      auto const content = detail::trim(line);
      if (content.empty() || content.front() == '#') {
        continue;
      }
      auto values = detail::split_integers(content, line_no);
      if (!order) {
        if (values.size() != 1 || values[0] <= 0) {
          throw ParseError("line " + std::to_string(line_no)
                           + ": expected a positive order");
        }
        order = static_cast<std::size_t>(values[0]);
        continue;
      }
      if (rows.size() == *order) {
        throw ParseError("line " + std::to_string(line_no)
                         + ": unexpected content after the last row");
      }
      if (values.size() != *order) {
        throw ParseError("line " + std::to_string(line_no) + ": expected "
                         + std::to_string(*order) + " entries, found "
                         + std::to_string(values.size()));
      }
      rows.push_back(std::move(values));
    }
    if (!order) {
      throw ParseError("missing order line");
    }
    if (rows.size() != *order) {
      throw ParseError("expected " + std::to_string(*order) + " rows, found "
                       + std::to_string(rows.size()));
    }
    return validate_table(*order, rows);
  }

  //! The normalized text of \p s, preceded by \p comments (one '#' line
  //! each).
  inline std::string write_table(SemigroupTable const&           s,
                                 std::vector<std::string> const& comments = {}) {
    std::ostringstream out;
    for (auto const& c : comments) {
      out << "# " << c << '\n';
    }
    out << s.order() << '\n';
    for (element_index a = 0; a < s.order(); ++a) {
      for (element_index b = 0; b < s.order(); ++b) {
        out << (b == 0 ? "" : " ") << s.product(a, b);
      }
      out << '\n';
    }
    return out.str();
  }

  inline SemigroupTable read_table_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return parse_table(buf.str());
    } catch (InvalidTable const& e) {
      throw InvalidTable(path + ": " + e.what());
    } catch (ParseError const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  inline void write_table_file(std::string const&              path,
                               SemigroupTable const&           s,
                               std::vector<std::string> const& comments = {}) {
    std::ofstream out(path);
    if (!out) {
      throw ParseError("cannot write " + path);
    }
    out << write_table(s, comments);
  }

  //! Parses "i0,i1,..." into a mapping into a semigroup of order
  //! \p codomain_order.
  inline ElementMapping parse_mapping(std::string_view spec,
                                      std::size_t      codomain_order) {
    std::vector<element_index> images;
    std::size_t                pos = 0;
    if (detail::trim(spec).empty()) {
      throw ParseError("empty mapping specification");
    }
    while (true) {
      auto end = spec.find(',', pos);
      auto tok = detail::trim(spec.substr(
          pos, end == std::string_view::npos ? std::string_view::npos
                                             : end - pos));
      auto v   = detail::parse_integer(tok, 1);
      if (v < 0 || static_cast<std::size_t>(v) >= codomain_order) {
        throw ParseError("image " + std::string(tok)
                         + " is outside a semigroup of order "
                         + std::to_string(codomain_order));
      }
      images.push_back(static_cast<element_index>(v));
      if (end == std::string_view::npos) {
        break;
      }
      pos = end + 1;
    }
    return ElementMapping(std::move(images), codomain_order);
  }

  inline std::string format_mapping(ElementMapping const& m) {
    std::string out;
    for (std::size_t k = 0; k < m.domain_size(); ++k) {
      out += (k == 0 ? "" : ",") + std::to_string(m[k]);
    }
    return out;
  }

}  // namespace rees_lab

#endif  // REES_LAB_IO_HPP_
