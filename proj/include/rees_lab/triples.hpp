// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// A triple A, B, C is right regular with respect to a couple (P, P') of
// mappings P: B -> A and P': B -> C when M(A; B; P) / theta is isomorphic to
// M(C; B; P'). This file decides that relation, searches couple spaces, and
// builds the explicit right regular triples of the construction theorems.
//
// B enters the Rees product only as an index set, so wherever its
// multiplication is irrelevant it is represented by its size alone.

#ifndef REES_LAB_TRIPLES_HPP_
#define REES_LAB_TRIPLES_HPP_

#include <algorithm>  // for lower_bound, max, min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <exception>  // for exception_ptr
#include <iterator>   // for make_move_iterator
#include <limits>     // for numeric_limits
#include <optional>   // for optional
#include <string>     // for string
#include <thread>     // for thread
#include <vector>     // for vector

#include "exception.hpp"
#include "isomorphism.hpp"
#include "predicates.hpp"
#include "rees.hpp"
#include "relations.hpp"
#include "retraction.hpp"
#include "table.hpp"

namespace rees_lab {

  ////////////////////////////////////////////////////////////////////////
  // Enumerating mappings
  ////////////////////////////////////////////////////////////////////////

  //! codomain^domain, saturating at the maximum of std::uint64_t.
  inline std::uint64_t number_of_mappings(std::size_t domain,
                                          std::size_t codomain) {
    std::uint64_t result = 1;
    for (std::size_t k = 0; k < domain; ++k) {
      if (codomain != 0
          && result > std::numeric_limits<std::uint64_t>::max() / codomain) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      result *= codomain;
    }
    return result;
  }

  //! The \p index-th mapping in lexicographic order of image sequences, i.e.
  //! the base-codomain digits of \p index with the image of 0 most
  //! significant.
  inline ElementMapping mapping_from_index(std::uint64_t index,
                                           std::size_t   domain,
                                           std::size_t   codomain) {
    std::vector<element_index> im(domain);
    for (std::size_t k = domain; k-- > 0;) {
      im[k] = static_cast<element_index>(index % codomain);
      index /= codomain;
    }
    return ElementMapping(std::move(im), codomain);
  }

  //! Calls \p fn on every mapping {0..domain-1} -> {0..codomain-1} in
  //! lexicographic order.
  template <typename Fn>
  void for_each_mapping(std::size_t domain, std::size_t codomain, Fn&& fn) {
    std::uint64_t const total = number_of_mappings(domain, codomain);
    for (std::uint64_t i = 0; i < total; ++i) {
      fn(mapping_from_index(i, domain, codomain));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  //! P: B -> A and P': B -> C over the same index set B.
  struct Couple {
    ElementMapping p;
    ElementMapping p_prime;

    bool operator==(Couple const&) const = default;
  };

  enum class FailureReason { order_mismatch, no_isomorphism };

  inline char const* to_string(FailureReason r) {
    return r == FailureReason::order_mismatch ? "order_mismatch"
                                              : "no_isomorphism";
  }

  struct TripleVerdict {
    bool        is_right_regular;
    std::size_t quotient_order;
    std::size_t target_order;
    //! From M(A; B; P) / theta onto M(C; B; P'); present iff right regular.
    std::optional<IsoWitness>    witness;
    std::optional<FailureReason> failure_reason;
  };

  namespace detail {
    inline void check_couple(SemigroupTable const& a,
                             std::size_t           b_size,
                             SemigroupTable const& c,
                             Couple const&         couple) {
      if (b_size == 0) {
        throw InvalidArgument("the index set B must be nonempty");
      }
      if (couple.p.domain_size() != b_size
          || couple.p_prime.domain_size() != b_size) {
        throw InvalidArgument("couple domains must both have size "
                              + std::to_string(b_size));
      }
      if (couple.p.codomain_order() != a.order()) {
        throw InvalidArgument("P must map into A");
      }
      if (couple.p_prime.codomain_order() != c.order()) {
        throw InvalidArgument("P' must map into C");
      }
    }

    // M(A; B; P) / theta, prepared once and compared against many targets.
    class PreparedQuotient {
     public:
      PreparedQuotient(SemigroupTable const& a,
                       std::size_t           b_size,
                       ElementMapping const& p)
          : _quotient(make(a, b_size, p)), _fingerprint() {}

      [[nodiscard]] SemigroupTable const& table() const noexcept {
        return _quotient;
      }

      TripleVerdict compare(SemigroupTable const& target) {
        TripleVerdict v{false, _quotient.order(), target.order(), {}, {}};
        if (_quotient.order() != target.order()) {
          v.failure_reason = FailureReason::order_mismatch;
          return v;
        }
        if (!_fingerprint) {
          _fingerprint = fingerprint(_quotient);
        }
        if (*_fingerprint == fingerprint(target)) {
          v.witness = detail::IsoSearch(_quotient, target).run();
        }
        if (v.witness) {
          if (!is_isomorphism(_quotient, target, *v.witness)) {
            throw Exception("internal error: invalid isomorphism witness");
          }
          v.is_right_regular = true;
        } else {
          v.failure_reason = FailureReason::no_isomorphism;
        }
        return v;
      }

     private:
      static SemigroupTable make(SemigroupTable const& a,
                                 std::size_t           b_size,
                                 ElementMapping const& p) {
        auto m = rees_matrix(a, b_size, p);
        return quotient(m.table, theta(m.table)).table;
      }

      SemigroupTable             _quotient;
      std::optional<Fingerprint> _fingerprint;
    };
  }  // namespace detail

  //! Decides whether A, B, C is right regular with respect to \p couple,
  //! where |B| = \p b_size.
  inline TripleVerdict check_right_regular(SemigroupTable const& a,
                                           std::size_t           b_size,
                                           SemigroupTable const& c,
                                           Couple const&         couple) {
    detail::check_couple(a, b_size, c, couple);
    detail::PreparedQuotient q(a, b_size, couple.p);
    return q.compare(rees_matrix(c, b_size, couple.p_prime).table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Couple search
  ////////////////////////////////////////////////////////////////////////

  struct SearchOptions {
    bool          require_p_surjective      = false;
    bool          require_p_prime_surjective = false;
    std::size_t   jobs                      = 1;
    std::uint64_t budget                    = 10'000'000;
  };

  struct FoundCouple {
    //! Position of the couple in the full lexicographic couple space.
    std::uint64_t index;
    Couple        couple;
    TripleVerdict verdict;
  };

  struct SearchResult {
    std::uint64_t            couple_space;  // |A|^b |C|^b
    std::uint64_t            examined;      // couples meeting the constraints
    std::vector<FoundCouple> found;
  };

  //! Every couple (P, P') for which A, B, C is right regular, in
  //! lexicographic order (P outer, P' inner). The couple space is cut into
  //! contiguous shards processed concurrently and concatenated in order, so
  //! the result does not depend on opts.jobs. Throws BudgetExceeded if the
  //! couple space is larger than opts.budget.
  inline SearchResult search_couples(SemigroupTable const& a,
                                     std::size_t           b_size,
                                     SemigroupTable const& c,
                                     SearchOptions const&  opts = {}) {
    if (b_size == 0) {
      throw InvalidArgument("the index set B must be nonempty");
    }
    std::uint64_t const n_p  = number_of_mappings(b_size, a.order());
    std::uint64_t const n_pp = number_of_mappings(b_size, c.order());
    constexpr auto      max  = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t const total
        = (n_p == max || n_pp == max || n_p > max / n_pp) ? max : n_p * n_pp;
    if (total > opts.budget) {
      throw BudgetExceeded("couple space of "
                           + (total == max ? std::string("more than 2^64")
                                           : std::to_string(total))
                           + " exceeds the budget of "
                           + std::to_string(opts.budget));
    }
    auto const targets_mapping = [&](std::uint64_t k) {
      return mapping_from_index(k, b_size, c.order());
    };

    std::size_t const jobs = static_cast<std::size_t>(std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(opts.jobs, total)));
    struct Shard {
      std::uint64_t            examined = 0;
      std::vector<FoundCouple> found;
    };
    std::vector<Shard>              shards(jobs);
    std::vector<std::exception_ptr> errors(jobs);

    auto work = [&](std::size_t job) {
      try {
        std::uint64_t const lo = total / jobs * job
                                 + std::min<std::uint64_t>(job, total % jobs);
        std::uint64_t const hi
            = lo + total / jobs + (job < total % jobs ? 1 : 0);
        std::optional<detail::PreparedQuotient> prepared;
        std::optional<ElementMapping>           p;
        std::uint64_t                           current_p = max;
        for (std::uint64_t k = lo; k < hi; ++k) {
          std::uint64_t const ip = k / n_pp;
          if (ip != current_p) {
            current_p = ip;
            p         = mapping_from_index(ip, b_size, a.order());
            prepared.reset();
          }
          if (opts.require_p_surjective && !p->is_surjective()) {
            // Skip straight to the next P.
            k = std::min(hi, (ip + 1) * n_pp) - 1;
            continue;
          }
          auto pp = targets_mapping(k % n_pp);
          if (opts.require_p_prime_surjective && !pp.is_surjective()) {
            continue;
          }
          ++shards[job].examined;
          if (!prepared) {
            prepared.emplace(a, b_size, *p);
          }
          auto v = prepared->compare(rees_matrix(c, b_size, pp).table);
          if (v.is_right_regular) {
            shards[job].found.push_back(
                FoundCouple{k, Couple{*p, std::move(pp)}, std::move(v)});
          }
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

    SearchResult result{total, 0, {}};
    for (auto& s : shards) {
      result.examined += s.examined;
      result.found.insert(result.found.end(),
                          std::make_move_iterator(s.found.begin()),
                          std::make_move_iterator(s.found.end()));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  //! All the data needed to call check_right_regular.
  struct TripleInstance {
    SemigroupTable a;
    std::size_t    b_size;
    SemigroupTable c;
    Couple         couple;
  };

  inline TripleVerdict check_right_regular(TripleInstance const& t) {
    return check_right_regular(t.a, t.b_size, t.c, t.couple);
  }

  //! C = A / alpha_P with P'(b) = [P(b)].
  struct AlphaQuotientConstruction {
    Partition      alpha;
    Quotient       quotient;  // C and the projection A -> C
    ElementMapping p_prime;

    [[nodiscard]] TripleInstance instance(SemigroupTable const& a,
                                          ElementMapping const& p) const {
      return {a, p.domain_size(), quotient.table, Couple{p, p_prime}};
    }
  };

  //! When alpha_P is a congruence, the triple A, B, A / alpha_P with
  //! P'(b) = [P(b)]; absent otherwise.
  inline std::optional<AlphaQuotientConstruction>
  th1_construct(SemigroupTable const& a,
                std::size_t           b_size,
                ElementMapping const& p) {
    if (p.domain_size() != b_size || p.codomain_order() != a.order()) {
      throw InvalidArgument("P must map an index set of size "
                            + std::to_string(b_size) + " into A");
    }
    auto al = alpha(a, p);
    if (!is_congruence(a, al)) {
      return std::nullopt;
    }
    auto q  = quotient(a, al);
    auto pp = p.then(q.projection);
    return AlphaQuotientConstruction{std::move(al), std::move(q), std::move(pp)};
  }

  //! Checks, independently of the quotient pipeline, that
  //! (a, b) |-> ([a], b) is a surjective homomorphism from M(A; B; P) onto
  //! M(C; B; P') whose kernel is theta of M(A; B; P).
  inline bool verify_alpha_quotient_map(SemigroupTable const&            a,
                                        ElementMapping const&            p,
                                        AlphaQuotientConstruction const& con) {
    std::size_t const b  = p.domain_size();
    auto const        m  = rees_matrix(a, b, p);
    auto const        nn = rees_matrix(con.quotient.table, b, con.p_prime);
    std::vector<element_index> phi(m.table.order());
    for (element_index x = 0; x < m.table.order(); ++x) {
      auto const [s, l] = m.labeling.decode(x);
      phi[x]            = nn.labeling.encode(con.quotient.projection[s], l);
    }
    ElementMapping const map(phi, nn.table.order());
    if (!is_homomorphism(m.table, nn.table, map) || !map.is_surjective()) {
      return false;
    }
    return Partition::from_labels(phi) == theta(m.table);
  }

  //! true iff alpha_P is the identity relation; in that case A, B, A is right
  //! regular with respect to (P, P), which is re-checked here (a failure
  //! throws).
  inline bool alpha_identity_check(SemigroupTable const& a,
                                   std::size_t           b_size,
                                   ElementMapping const& p) {
    if (p.domain_size() != b_size) {
      throw InvalidArgument("P must have domain size "
                            + std::to_string(b_size));
    }
    if (!alpha(a, p).is_identity()) {
      return false;
    }
    if (!check_right_regular(a, b_size, a, Couple{p, p}).is_right_regular) {
      throw Exception("alpha_P is the identity but A, B, A is not right "
                      "regular with respect to (P, P)");
    }
    return true;
  }

  //! The triple A, A x B, A / theta*_A with P_A(a, b) = a and
  //! P'(a, b) = [a].
  inline TripleInstance corollary_direct_product(SemigroupTable const& a,
                                                 SemigroupTable const& b) {
    auto const pa = product_projection_left(a, b);
    auto       q  = quotient(a, theta_star(a));
    auto       pp = pa.then(q.projection);
    return {a, pa.domain_size(), std::move(q.table), Couple{pa, std::move(pp)}};
  }

  namespace detail {
    // The triple A x B, A, QA x QB with P_A(a) = (a, phi(a)) and
    // P'(a) = ([a], [phi(a)]); phi maps A into B.
    inline TripleInstance product_triple(SemigroupTable const& a,
                                         SemigroupTable const& b,
                                         ElementMapping const& phi,
                                         Quotient const&       qa,
                                         Quotient const&       qb) {
      std::size_t const          n = a.order();
      std::vector<element_index> pa(n), pp(n);
      for (element_index x = 0; x < n; ++x) {
        pa[x] = x * b.order() + phi[x];
        pp[x] = qa.projection[x] * qb.table.order() + qb.projection[phi[x]];
      }
      auto c = direct_product(qa.table, qb.table);
      return {direct_product(a, b),
              n,
              c,
              Couple{ElementMapping(std::move(pa), a.order() * b.order()),
                     ElementMapping(std::move(pp), c.order())}};
    }

    inline void check_phi(SemigroupTable const& a,
                          SemigroupTable const& b,
                          ElementMapping const& phi) {
      if (phi.domain_size() != a.order() || phi.codomain_order() != b.order()) {
        throw InvalidArgument("phi must map A into B");
      }
    }
  }  // namespace detail

  //! When alpha_phi is a congruence on B, the triple
  //! A x B, A, A / theta*_A x B / alpha_phi; absent otherwise.
  inline std::optional<TripleInstance>
  thmvarphi_construct(SemigroupTable const& a,
                      SemigroupTable const& b,
                      ElementMapping const& phi) {
    detail::check_phi(a, b, phi);
    auto al = alpha(b, phi);
    if (!is_congruence(b, al)) {
      return std::nullopt;
    }
    return detail::product_triple(
        a, b, phi, quotient(a, theta_star(a)), quotient(b, al));
  }

  //! For a surjective phi: A -> B, the triple
  //! A x B, A, A / theta*_A x B / theta*_B (built from theta*_B directly).
  inline std::optional<TripleInstance>
  corollary_surjective_phi(SemigroupTable const& a,
                           SemigroupTable const& b,
                           ElementMapping const& phi) {
    detail::check_phi(a, b, phi);
    if (!phi.is_surjective()) {
      return std::nullopt;
    }
    return detail::product_triple(
        a, b, phi, quotient(a, theta_star(a)), quotient(b, theta_star(b)));
  }

  //! For a retract ideal B of A with retract homomorphism \p phi (an
  //! endomorphism of A), the triple A x B, A, A / theta*_A x B / theta*_B.
  //! Absent unless \p ideal_subset is an ideal and \p phi a retraction onto it.
  inline std::optional<TripleInstance>
  corollary_retract(SemigroupTable const&      a,
                    std::vector<element_index> ideal_subset,
                    ElementMapping const&      phi) {
    if (phi.domain_size() != a.order() || phi.codomain_order() != a.order()) {
      throw InvalidArgument("phi must be a mapping of A into A");
    }
    if (!is_ideal(a, ideal_subset)
        || !is_retract_homomorphism(a, ideal_subset, phi)) {
      return std::nullopt;
    }
    auto                       b = induced_subsemigroup(a, ideal_subset);
    std::vector<element_index> im(a.order());
    for (element_index x = 0; x < a.order(); ++x) {
      im[x] = b.index_of(phi[x]);
    }
    ElementMapping const onto(std::move(im), b.table.order());
    return detail::product_triple(a,
                                  b.table,
                                  onto,
                                  quotient(a, theta_star(a)),
                                  quotient(b.table, theta_star(b.table)));
  }

  //! For an ideal B of A which is a group with identity e, the triple
  //! A x B, A, A / theta*_A x B with P_A(a) = (a, ae). Absent unless the
  //! hypotheses hold.
  inline std::optional<TripleInstance>
  corollary_group_ideal(SemigroupTable const&      a,
                        std::vector<element_index> ideal_subset) {
    if (!is_ideal(a, ideal_subset)) {
      return std::nullopt;
    }
    auto b = induced_subsemigroup(a, ideal_subset);
    if (!is_group(b.table)) {
      return std::nullopt;
    }
    auto const                 retraction = group_ideal_retraction(a, ideal_subset);
    std::vector<element_index> im(a.order());
    for (element_index x = 0; x < a.order(); ++x) {
      im[x] = b.index_of(retraction[x]);
    }
    ElementMapping const onto(std::move(im), b.table.order());
    Quotient const       whole{b.table, ElementMapping::identity(b.table.order())};
    return detail::product_triple(
        a, b.table, onto, quotient(a, theta_star(a)), whole);
  }

  //! For an ideal A of B and a surjective homomorphism P of B onto A (given
  //! as a mapping of B into B with image \p ideal_subset), the triple
  //! A, B, A / theta*_A with P'(b) = [P(b)]. Absent unless the hypotheses
  //! hold.
  inline std::optional<TripleInstance>
  corollary_surjective_hom(SemigroupTable const&      b,
                           std::vector<element_index> ideal_subset,
                           ElementMapping const&      p) {
    if (p.domain_size() != b.order() || p.codomain_order() != b.order()) {
      throw InvalidArgument("P must be a mapping of B into B");
    }
    if (!is_ideal(b, ideal_subset)) {
      return std::nullopt;
    }
    auto const                 a = induced_subsemigroup(b, ideal_subset);
    std::vector<element_index> im(b.order());
    for (element_index x = 0; x < b.order(); ++x) {
      auto it = std::lower_bound(a.elements.begin(), a.elements.end(), p[x]);
      if (it == a.elements.end() || *it != p[x]) {
        return std::nullopt;
      }
      im[x] = static_cast<element_index>(it - a.elements.begin());
    }
    ElementMapping const onto(std::move(im), a.table.order());
    if (!onto.is_surjective() || !is_homomorphism(b, a.table, onto)) {
      return std::nullopt;
    }
    auto q  = quotient(a.table, theta_star(a.table));
    auto pp = onto.then(q.projection);
    return TripleInstance{
        a.table, b.order(), std::move(q.table), Couple{onto, std::move(pp)}};
  }

}  // namespace rees_lab

#endif  // REES_LAB_TRIPLES_HPP_
