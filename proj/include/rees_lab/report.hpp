// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// JSON serialization of results. Objects use insertion-ordered keys so the
// field order of every record is fixed.

#ifndef REES_LAB_REPORT_HPP_
#define REES_LAB_REPORT_HPP_

#include <string>  // for string

#include "json.hpp"

#include "partition.hpp"
#include "predicates.hpp"
#include "table.hpp"
#include "theorems.hpp"
#include "triples.hpp"

namespace rees_lab {

  inline constexpr char const* version = "0.1.0";

  using json = nlohmann::ordered_json;

  inline json to_json(SemigroupTable const& s) {
    return s.rows();
  }

  inline json to_json(Partition const& p) {
    return p.classes();
  }

  inline json to_json(PropertyProfile const& p) {
    return json{{"right_simple", p.right_simple},
                {"left_simple", p.left_simple},
                {"simple", p.simple},
                {"left_cancellative", p.left_cancellative},
                {"right_group", p.right_group},
                {"group", p.group},
                {"left_equalizer_simple", p.left_equalizer_simple},
                {"left_reductive", p.left_reductive},
                {"medial", p.medial},
                {"left_commutative", p.left_commutative},
                {"commutative", p.commutative}};
  }

  inline json to_json(TripleVerdict const& v) {
    json out{{"is_right_regular", v.is_right_regular},
             {"quotient_order", v.quotient_order},
             {"target_order", v.target_order}};
    out["witness"] = v.witness ? json(*v.witness) : json(nullptr);
    out["failure_reason"]
        = v.failure_reason ? json(to_string(*v.failure_reason)) : json(nullptr);
    return out;
  }

  inline json to_json(Bounds const& b) {
    return json{{"a_order_max", b.a_order_max},
                {"c_order_max", b.c_order_max},
                {"b_size_max", b.b_size_max},
                {"existential", b.existential},
                {"sample_rate", b.sample_rate},
                {"seed", b.seed}};
  }

  inline json to_json(Counterexample const& c) {
    json tables = json::object();
    for (auto const& t : c.tables) {
      tables[t.name] = to_json(t.table);
    }
    json mappings = json::object();
    for (auto const& m : c.mappings) {
      mappings[m.name] = m.images;
    }
    return json{{"reason", c.reason},
                {"tables", tables},
                {"mappings", mappings},
                {"verdict", c.verdict ? to_json(*c.verdict) : json(nullptr)}};
  }

  inline json to_json(TheoremReport const& r) {
    return json{{"theorem_id", r.theorem_id},
                {"bounds", to_json(r.bounds)},
                {"instances_examined", r.instances_examined},
                {"hypothesis_unmet", r.hypothesis_unmet},
                {"passed", r.passed},
                {"failed", r.failed},
                {"counterexample",
                 r.counterexample ? to_json(*r.counterexample) : json(nullptr)}};
  }

  //! {command, inputs, <fields>, version, elapsed_ms}.
  inline json make_record(std::string const& command,
                          json               inputs,
                          json const&        fields,
                          double             elapsed_ms) {
    json out{{"command", command}, {"inputs", std::move(inputs)}};
    for (auto const& [k, v] : fields.items()) {
      out[k] = v;
    }
    out["version"]    = version;
    out["elapsed_ms"] = elapsed_ms;
    return out;
  }

}  // namespace rees_lab

#endif  // REES_LAB_REPORT_HPP_
