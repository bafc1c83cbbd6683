// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// Exhaustive verification campaigns. Each campaign walks every instance of
// one result about right regular triples within the given bounds, skips the
// instances whose hypotheses fail, and checks the conclusion on the rest.

#ifndef REES_LAB_THEOREMS_HPP_
#define REES_LAB_THEOREMS_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <functional>   // for function
#include <optional>     // for optional
#include <random>       // for mt19937_64, bernoulli_distribution
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "enumeration.hpp"
#include "exception.hpp"
#include "predicates.hpp"
#include "relations.hpp"
#include "triples.hpp"

namespace rees_lab {

  enum class TheoremId {
    t1,          // A right simple => C right simple
    t2,          // A right group => C right group
    t3,          // A simple => C simple
    p4,          // A left equalizer simple => M(A; L; P) left equalizer simple
    t5,          // P' surjective, A left equalizer simple => C left canc.
    t6,          // C left commutative, A left equalizer simple => C left canc.
    t7,          // P surjective, A left reductive => C left reductive
    ralpha,      // alpha_P identity => A, B, A right regular
    th1,         // alpha_P congruence => A, B, A / alpha_P right regular
    cmedial,     // A medial => alpha_P congruence, triple right regular
    rsurj,       // alpha_P contains theta*_A, equality for surjective P
    tphi,        // alpha_phi congruence => A x B, A, A/theta* x B/alpha_phi
    dirprod,     // A, A x B, A / theta*_A
    surjhom,     // A ideal of B, P: B -> A surjective homomorphism
    surjphi,     // phi: A -> B surjective
    retract,     // B retract ideal of A
    groupideal,  // B ideal of A and a group
  };

  inline constexpr std::array<std::pair<TheoremId, std::string_view>, 17>
      theorem_names = {{{TheoremId::t1, "t1"},
                        {TheoremId::t2, "t2"},
                        {TheoremId::t3, "t3"},
                        {TheoremId::p4, "p4"},
                        {TheoremId::t5, "t5"},
                        {TheoremId::t6, "t6"},
                        {TheoremId::t7, "t7"},
                        {TheoremId::ralpha, "ralpha"},
                        {TheoremId::th1, "th1"},
                        {TheoremId::cmedial, "cmedial"},
                        {TheoremId::rsurj, "rsurj"},
                        {TheoremId::tphi, "tphi"},
                        {TheoremId::dirprod, "dirprod"},
                        {TheoremId::surjhom, "surjhom"},
                        {TheoremId::surjphi, "surjphi"},
                        {TheoremId::retract, "retract"},
                        {TheoremId::groupideal, "groupideal"}}};

  inline std::string_view to_string(TheoremId id) {
    for (auto const& [k, v] : theorem_names) {
      if (k == id) {
        return v;
      }
    }
    return "?";
  }

  inline TheoremId theorem_from_string(std::string_view name) {
    for (auto const& [k, v] : theorem_names) {
      if (v == name) {
        return k;
      }
    }
    throw InvalidArgument("unknown theorem \"" + std::string(name) + "\"");
  }

  struct Bounds {
    //! Largest order of A (the first semigroup) drawn from the corpus.
    std::size_t a_order_max = 2;
    //! Largest order of C, or of the second semigroup B in the constructions.
    std::size_t c_order_max = 2;
    //! Largest index set size (unused by the constructions whose index set is
    //! a carrier, and by rsurj, which uses |A| + 1).
    std::size_t b_size_max = 2;
    //! Quantify over couples per (A, B, C) instead of per couple (t1 - t7).
    bool existential = false;
    //! Fraction of instances examined; 1 means exhaustive.
    double        sample_rate = 1.0;
    std::uint64_t seed        = 0;
    //! Maximum number of instances.
    std::uint64_t budget = 50'000'000;
  };

  //! The bounds used when none are given on the command line.
  inline Bounds default_bounds(TheoremId id) {
    Bounds b;
    switch (id) {
      case TheoremId::th1:
      case TheoremId::cmedial:
      case TheoremId::p4:
      case TheoremId::ralpha:
        b.a_order_max = b.c_order_max = 3;
        b.b_size_max                  = 3;
        break;
      case TheoremId::rsurj:
        b.a_order_max = b.c_order_max = 3;
        break;
      default:
        break;
    }
    return b;
  }

  //! A table or mapping attached to a counterexample, with its role.
  struct NamedTable {
    std::string    name;
    SemigroupTable table;
  };

  struct NamedMapping {
    std::string                name;
    std::vector<element_index> images;
  };

  struct Counterexample {
    std::string                  reason;
    std::vector<NamedTable>      tables;
    std::vector<NamedMapping>    mappings;
    std::optional<TripleVerdict> verdict;
  };

  struct TheoremReport {
    std::string   theorem_id;
    Bounds        bounds;
    std::uint64_t instances_examined = 0;
    std::uint64_t hypothesis_unmet   = 0;
    std::uint64_t passed             = 0;
    std::uint64_t failed             = 0;
    std::optional<Counterexample> counterexample;
  };

  //! All corpus members of order 1 to \p max_order.
  inline std::vector<SemigroupTable> corpus_up_to(std::size_t max_order) {
    std::vector<SemigroupTable> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto c = enumerate_backtracking(n);
      out.insert(out.end(), c.members.begin(), c.members.end());
    }
    return out;
  }

  namespace detail {
    class Campaign {
     public:
      Campaign(TheoremId id, Bounds const& bounds)
          : _report{std::string(to_string(id)), bounds, 0, 0, 0, 0, {}},
            _rng(bounds.seed),
            _coin(std::min(1.0, std::max(0.0, bounds.sample_rate))) {}

      // Returns false if a sampled sweep drops this instance.
      bool take() {
        if (_report.bounds.sample_rate < 1.0 && !_coin(_rng)) {
          return false;
        }
        if (++_report.instances_examined > _report.bounds.budget) {
          throw BudgetExceeded("verification budget of "
                               + std::to_string(_report.bounds.budget)
                               + " instances exceeded");
        }
        return true;
      }

      void skip() {
        ++_report.hypothesis_unmet;
      }

      void pass() {
        ++_report.passed;
      }

      void fail(Counterexample cx) {
        ++_report.failed;
        if (!_report.counterexample) {
          _report.counterexample = std::move(cx);
        }
      }

      //! Records \p n instances whose hypotheses fail without visiting them.
      void skip_many(std::uint64_t n) {
        for (std::uint64_t k = 0; k < n; ++k) {
          if (take()) {
            skip();
          }
        }
      }

      TheoremReport const& report() const {
        return _report;
      }

     private:
      TheoremReport                _report;
      std::mt19937_64              _rng;
      std::bernoulli_distribution  _coin;
    };

    inline std::vector<std::vector<element_index>>
    nonempty_subsets(std::size_t n) {
      std::vector<std::vector<element_index>> out;
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<element_index> s;
        for (element_index x = 0; x < n; ++x) {
          if (mask & (std::uint64_t(1) << x)) {
            s.push_back(x);
          }
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    struct Implication {
      std::function<bool(SemigroupTable const&)> hypothesis_a;
      std::function<bool(SemigroupTable const&)> hypothesis_c;
      std::function<bool(SemigroupTable const&)> conclusion_c;
      bool                                       p_surjective       = false;
      bool                                       p_prime_surjective = false;
      char const*                                conclusion_name;
    };

    inline Implication implication(TheoremId id) {
      auto yes = [](SemigroupTable const&) { return true; };
      switch (id) {
        case TheoremId::t1:
          return {is_right_simple, yes, is_right_simple, false, false,
                  "C is right simple"};
        case TheoremId::t2:
          return {is_right_group, yes, is_right_group, false, false,
                  "C is a right group"};
        case TheoremId::t3:
          return {is_simple, yes, is_simple, false, false, "C is simple"};
        case TheoremId::t5:
          return {is_left_equalizer_simple, yes, is_left_cancellative, false,
                  true, "C is left cancellative"};
        case TheoremId::t6:
          return {is_left_equalizer_simple, is_left_commutative,
                  is_left_cancellative, false, false,
                  "C is left cancellative"};
        case TheoremId::t7:
          return {is_left_reductive, yes, is_left_reductive, true, false,
                  "C is left reductive"};
        default:
          throw InvalidArgument("not an implication theorem");
      }
    }

    inline Counterexample triple_counterexample(std::string const&    reason,
                                                TripleInstance const& t,
                                                TripleVerdict const&  v) {
      return Counterexample{reason,
                            {{"A", t.a}, {"C", t.c}},
                            {{"P", t.couple.p.images()},
                             {"P_prime", t.couple.p_prime.images()}},
                            v};
    }

    // Per couple: every (A, b, C, P, P') is one instance. Existentially:
    // every (A, b, C) is one instance, right regular if some admissible
    // couple works.
    inline void run_implication(Campaign&                          cam,
                                Implication const&                 imp,
                                std::vector<SemigroupTable> const& as,
                                std::vector<SemigroupTable> const& cs,
                                Bounds const&                      bounds) {
      for (auto const& a : as) {
        bool const hyp_a = imp.hypothesis_a(a);
        for (std::size_t b = 1; b <= bounds.b_size_max; ++b) {
          for (auto const& c : cs) {
            bool const hyp       = hyp_a && imp.hypothesis_c(c);
            std::uint64_t const couples = number_of_mappings(b, a.order())
                                          * number_of_mappings(b, c.order());
            if (bounds.existential) {
              if (!cam.take()) {
                continue;
              }
              if (!hyp) {
                cam.skip();
                continue;
              }
              SearchOptions opts;
              opts.require_p_surjective       = imp.p_surjective;
              opts.require_p_prime_surjective = imp.p_prime_surjective;
              opts.budget                     = bounds.budget;
              auto found = search_couples(a, b, c, opts);
              if (found.found.empty()) {
                cam.skip();
              } else if (imp.conclusion_c(c)) {
                cam.pass();
              } else {
                auto const& f = found.found.front();
                cam.fail(triple_counterexample(
                    std::string("right regular, hypothesis holds, but not: ")
                        + imp.conclusion_name,
                    TripleInstance{a, b, c, f.couple},
                    f.verdict));
              }
              continue;
            }
            if (!hyp) {
              cam.skip_many(couples);
              continue;
            }
            bool const conclusion = imp.conclusion_c(c);
            for_each_mapping(b, a.order(), [&](ElementMapping const& p) {
              std::optional<PreparedQuotient> prepared;
              for_each_mapping(b, c.order(), [&](ElementMapping const& pp) {
                if (!cam.take()) {
                  return;
                }
                if ((imp.p_surjective && !p.is_surjective())
                    || (imp.p_prime_surjective && !pp.is_surjective())) {
                  cam.skip();
                  return;
                }
                if (!prepared) {
                  prepared.emplace(a, b, p);
                }
                auto v = prepared->compare(rees_matrix(c, b, pp).table);
                if (!v.is_right_regular) {
                  cam.skip();
                } else if (conclusion) {
                  cam.pass();
                } else {
                  cam.fail(triple_counterexample(
                      std::string("right regular, hypothesis holds, but not: ")
                          + imp.conclusion_name,
                      TripleInstance{a, b, c, Couple{p, pp}},
                      v));
                }
              });
            });
          }
        }
      }
    }

    // Asserts that a constructed instance is right regular.
    inline void expect_right_regular(Campaign&             cam,
                                     TripleInstance const& t,
                                     std::string const&    what) {
      auto v = check_right_regular(t);
      if (v.is_right_regular) {
        cam.pass();
      } else {
        cam.fail(triple_counterexample(what + " is not right regular", t, v));
      }
    }
  }  // namespace detail

  //! Runs the campaign for \p id over the enumerated corpora within
  //! \p bounds.
  inline TheoremReport verify_theorem(TheoremId id, Bounds const& bounds) {
    detail::Campaign cam(id, bounds);
    auto const       as = corpus_up_to(bounds.a_order_max);
    auto const       cs = corpus_up_to(bounds.c_order_max);

    switch (id) {
      case TheoremId::t1:
      case TheoremId::t2:
      case TheoremId::t3:
      case TheoremId::t5:
      case TheoremId::t6:
      case TheoremId::t7:
        detail::run_implication(cam, detail::implication(id), as, cs, bounds);
        break;

      case TheoremId::p4:
        for (auto const& a : as) {
          bool const les = is_left_equalizer_simple(a);
          for (std::size_t b = 1; b <= bounds.b_size_max; ++b) {
            for_each_mapping(b, a.order(), [&](ElementMapping const& p) {
              if (!cam.take()) {
                return;
              }
              if (!les) {
                cam.skip();
              } else if (is_left_equalizer_simple(rees_matrix(a, b, p).table)) {
                cam.pass();
              } else {
                cam.fail({"M(A; L; P) is not left equalizer simple",
                          {{"A", a}},
                          {{"P", p.images()}},
                          {}});
              }
            });
          }
        }
        break;

      case TheoremId::ralpha:
        for (auto const& a : as) {
          for (std::size_t b = 1; b <= bounds.b_size_max; ++b) {
            for_each_mapping(b, a.order(), [&](ElementMapping const& p) {
              if (!cam.take()) {
                return;
              }
              if (!alpha(a, p).is_identity()) {
                cam.skip();
                return;
              }
              detail::expect_right_regular(
                  cam, TripleInstance{a, b, a, Couple{p, p}}, "A, B, A");
            });
          }
        }
        break;

      case TheoremId::th1:
        for (auto const& a : as) {
          for (std::size_t b = 1; b <= bounds.b_size_max; ++b) {
            for_each_mapping(b, a.order(), [&](ElementMapping const& p) {
              if (!cam.take()) {
                return;
              }
              auto con = th1_construct(a, b, p);
              if (!con) {
                cam.skip();
                return;
              }
              auto const t = con->instance(a, p);
              auto       v = check_right_regular(t);
              if (!v.is_right_regular) {
                cam.fail(detail::triple_counterexample(
                    "A, B, A / alpha_P is not right regular", t, v));
              } else if (!verify_alpha_quotient_map(a, p, *con)) {
                cam.fail(detail::triple_counterexample(
                    "(a, b) |-> ([a], b) is not a surjective homomorphism "
                    "with kernel theta",
                    t,
                    v));
              } else {
                cam.pass();
              }
            });
          }
        }
        break;

      case TheoremId::cmedial:
        for (auto const& a : as) {
          bool const medial = is_medial(a);
          for (std::size_t b = 1; b <= bounds.b_size_max; ++b) {
            for_each_mapping(b, a.order(), [&](ElementMapping const& p) {
              if (!cam.take()) {
                return;
              }
              if (!medial) {
                cam.skip();
                return;
              }
              auto con = th1_construct(a, b, p);
              if (!con) {
                cam.fail({"A is medial but alpha_P is not a congruence",
                          {{"A", a}},
                          {{"P", p.images()}},
                          {}});
                return;
              }
              detail::expect_right_regular(
                  cam, con->instance(a, p), "A, B, A / alpha_P");
            });
          }
        }
        break;

      case TheoremId::rsurj:
        for (auto const& a : as) {
          auto const ts = theta_star(a);
          for (std::size_t b = 1; b <= a.order() + 1; ++b) {
            for_each_mapping(b, a.order(), [&](ElementMapping const& p) {
              if (!cam.take()) {
                return;
              }
              auto const al = alpha(a, p);
              bool const ok
                  = p.is_surjective() ? al == ts : ts.is_subset_of(al);
              if (ok) {
                cam.pass();
              } else {
                cam.fail({p.is_surjective()
                              ? "P is surjective but alpha_P != theta*_A"
                              : "alpha_P does not contain theta*_A",
                          {{"A", a}},
                          {{"P", p.images()}},
                          {}});
              }
            });
          }
        }
        break;

      case TheoremId::tphi:
      case TheoremId::surjphi:
        for (auto const& a : as) {
          for (auto const& b : cs) {
            for_each_mapping(a.order(), b.order(), [&](ElementMapping const& phi) {
              if (!cam.take()) {
                return;
              }
              auto t = id == TheoremId::tphi
                           ? thmvarphi_construct(a, b, phi)
                           : corollary_surjective_phi(a, b, phi);
              if (!t) {
                cam.skip();
                return;
              }
              detail::expect_right_regular(cam, *t, "A x B, A, C");
            });
          }
        }
        break;

      case TheoremId::dirprod:
        for (auto const& a : as) {
          for (auto const& b : cs) {
            if (cam.take()) {
              detail::expect_right_regular(
                  cam, corollary_direct_product(a, b), "A, A x B, A / theta*_A");
            }
          }
        }
        break;

      case TheoremId::surjhom:
        // Here the corpus supplies B, and A ranges over subsets of B.
        for (auto const& b : cs) {
          for (auto const& sub : detail::nonempty_subsets(b.order())) {
            for_each_mapping(b.order(), sub.size(), [&](ElementMapping const& k) {
              if (!cam.take()) {
                return;
              }
              std::vector<element_index> im(b.order());
              for (element_index x = 0; x < b.order(); ++x) {
                im[x] = sub[k[x]];
              }
              auto t = corollary_surjective_hom(
                  b, sub, ElementMapping(std::move(im), b.order()));
              if (!t) {
                cam.skip();
                return;
              }
              detail::expect_right_regular(cam, *t, "A, B, A / theta*_A");
            });
          }
        }
        break;

      case TheoremId::retract:
        for (auto const& a : as) {
          for (auto const& sub : detail::nonempty_subsets(a.order())) {
            for_each_mapping(a.order(), sub.size(), [&](ElementMapping const& k) {
              if (!cam.take()) {
                return;
              }
              std::vector<element_index> im(a.order());
              for (element_index x = 0; x < a.order(); ++x) {
                im[x] = sub[k[x]];
              }
              auto t = corollary_retract(
                  a, sub, ElementMapping(std::move(im), a.order()));
              if (!t) {
                cam.skip();
                return;
              }
              detail::expect_right_regular(cam, *t, "A x B, A, C");
            });
          }
        }
        break;

      case TheoremId::groupideal:
        for (auto const& a : as) {
          for (auto const& sub : detail::nonempty_subsets(a.order())) {
            if (!cam.take()) {
              continue;
            }
            auto t = corollary_group_ideal(a, sub);
            if (!t) {
              cam.skip();
              continue;
            }
            detail::expect_right_regular(cam, *t, "A x B, A, A / theta*_A x B");
          }
        }
        break;
    }
    return cam.report();
  }

}  // namespace rees_lab

#endif  // REES_LAB_THEOREMS_HPP_
