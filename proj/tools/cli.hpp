// rees-lab - finite semigroups, Rees matrix semigroups and right regular
// triples

// The rees-lab command line. Every command prints JSON records, one object
// per line. Exit codes: 0 success, 1 negative verdict (check-triple) or
// failed verification, 2 input error, 3 budget exceeded.

#ifndef REES_LAB_TOOLS_CLI_HPP_
#define REES_LAB_TOOLS_CLI_HPP_

#include <chrono>      // for steady_clock
#include <cstdint>     // for uint64_t
#include <cstdlib>     // for getenv
#include <filesystem>  // for path, create_directories
#include <iomanip>     // for setw, setfill
#include <optional>    // for optional
#include <ostream>     // for ostream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"

#include "rees_lab/rees_lab.hpp"
#include "rees_lab/report.hpp"

namespace rees_lab::cli {

  enum exit_code : int {
    success        = 0,
    verdict_false  = 1,
    input_error    = 2,
    budget_error   = 3,
  };

  //! REES_LAB_BUDGET, if set to a positive integer.
  inline std::optional<std::uint64_t> budget_from_environment() {
    char const* env = std::getenv("REES_LAB_BUDGET");
    if (env == nullptr || *env == '\0') {
      return std::nullopt;
    }
    try {
      std::size_t used = 0;
      auto        v    = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) {
        return v;
      }
    } catch (std::exception const&) {
    }
    throw InvalidArgument("REES_LAB_BUDGET must be a positive integer");
  }

  class Timer {
   public:
    explicit Timer(bool enabled)
        : _enabled(enabled), _start(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
      if (!_enabled) {
        return 0;
      }
      return std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - _start)
          .count();
    }

   private:
    bool                                  _enabled;
    std::chrono::steady_clock::time_point _start;
  };

  inline int run(std::vector<std::string> args,
                 std::ostream&            out,
                 std::ostream&            err) {
    CLI::App app{"rees-lab: finite semigroups, Rees matrix semigroups and "
                 "right regular triples"};
    app.require_subcommand(1);
    bool no_timing = false;
    app.add_flag("--no-timing",
                 no_timing,
                 "report elapsed_ms as 0 so that output is reproducible");

    // props
    std::string props_table;
    auto* props = app.add_subcommand("props", "property profile and theta");
    props->add_option("table", props_table, "table file")->required();

    // rees
    std::string rees_table, rees_p, rees_out;
    std::size_t rees_lambda = 0;
    auto* rees = app.add_subcommand("rees", "build M(A; Lambda; P)");
    rees->add_option("table", rees_table, "table file for A")->required();
    rees->add_option("lambda_size", rees_lambda, "|Lambda|")->required();
    rees->add_option("P", rees_p, "sandwich mapping, e.g. 0,1")->required();
    rees->add_option("out", rees_out, "output table file")->required();

    // check-triple
    std::string ct_a, ct_c, ct_p, ct_pp;
    std::size_t ct_b = 0;
    auto* check = app.add_subcommand(
        "check-triple", "decide right regularity for a couple (P, P')");
    check->add_option("table_a", ct_a, "table file for A")->required();
    check->add_option("b_size", ct_b, "|B|")->required();
    check->add_option("table_c", ct_c, "table file for C")->required();
    check->add_option("P", ct_p, "mapping B -> A")->required();
    check->add_option("P_prime", ct_pp, "mapping B -> C")->required();

    // search
    std::string                  s_a, s_c;
    std::size_t                  s_b     = 0;
    bool                         s_psurj = false, s_ppsurj = false;
    std::size_t                  s_jobs  = 1;
    std::optional<std::uint64_t> s_budget;
    auto* search = app.add_subcommand("search",
                                      "all couples making A, B, C right regular");
    search->add_option("table_a", s_a, "table file for A")->required();
    search->add_option("b_size", s_b, "|B|")->required();
    search->add_option("table_c", s_c, "table file for C")->required();
    search->add_flag("--require-p-surjective", s_psurj);
    search->add_flag("--require-pprime-surjective", s_ppsurj);
    search->add_option("--jobs", s_jobs, "number of shards")
        ->check(CLI::PositiveNumber);
    search->add_option("--budget", s_budget, "maximum number of couples")
        ->check(CLI::PositiveNumber);

    // verify
    std::string                  v_theorem;
    std::optional<std::size_t>   v_order, v_c_order, v_b_size;
    bool                         v_existential = false;
    std::uint64_t                v_seed        = 0;
    double                       v_rate        = 1.0;
    std::optional<std::uint64_t> v_budget;
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::vector<std::string> names;
    for (auto const& [id, name] : theorem_names) {
      names.emplace_back(name);
    }
    verify->add_option("theorem", v_theorem)
        ->required()
        ->check(CLI::IsMember(names));
    verify->add_option("--corpus-order", v_order, "largest order of A")
        ->check(CLI::Range(1, 4));
    verify->add_option("--c-order",
                       v_c_order,
                       "largest order of C (or of B in the constructions)")
        ->check(CLI::Range(1, 4));
    verify->add_option("--b-size", v_b_size, "largest index set size")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--existential",
                     v_existential,
                     "quantify over couples per triple (t1 - t7)");
    verify->add_option("--seed", v_seed, "seed for sampled sweeps");
    verify->add_option("--sample-rate", v_rate, "fraction of instances")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--budget", v_budget, "maximum number of instances")
        ->check(CLI::PositiveNumber);

    // enumerate
    std::size_t                  e_n = 0;
    std::string                  e_mode = "backtracking", e_out;
    std::size_t                  e_jobs = 1;
    std::optional<std::uint64_t> e_budget;
    auto* enumerate = app.add_subcommand(
        "enumerate", "all semigroups of order n up to isomorphism");
    enumerate->add_option("n", e_n, "order")->required()->check(
        CLI::PositiveNumber);
    enumerate->add_option("--mode", e_mode)->check(
        CLI::IsMember({"naive", "backtracking"}));
    enumerate->add_option("--out-dir", e_out, "write one table file per member");
    enumerate->add_option("--jobs", e_jobs)->check(CLI::PositiveNumber);
    enumerate->add_option("--budget", e_budget, "maximum search nodes")
        ->check(CLI::PositiveNumber);

    // named
    std::string                named_name, named_out;
    std::optional<std::size_t> named_n;
    auto* named = app.add_subcommand("named", "write a named table");
    named->add_option("name", named_name)->required()->check(
        CLI::IsMember(named_table_names()));
    named->add_option("n", named_n, "order, for the families");
    named->add_option("--out", named_out, "output file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }

    Timer const timer(!no_timing);
    auto        emit = [&](json const& j) { out << j.dump() << '\n'; };

    try {
      auto const env_budget = budget_from_environment();

      if (props->parsed()) {
        auto const s = read_table_file(props_table);
        emit(make_record("props",
                         json{{"table", props_table}},
                         json{{"order", s.order()},
                              {"profile", to_json(property_profile(s))},
                              {"theta_classes", to_json(theta(s))}},
                         timer.elapsed_ms()));
        return success;
      }

      if (rees->parsed()) {
        auto const a = read_table_file(rees_table);
        auto const p = parse_mapping(rees_p, a.order());
        auto const m = rees_matrix(a, rees_lambda, p);
        write_table_file(
            rees_out,
            m.table,
            {"Rees matrix semigroup M(A; Lambda; P) with |A| = "
                 + std::to_string(a.order())
                 + ", |Lambda| = " + std::to_string(rees_lambda)
                 + ", P = " + format_mapping(p),
             "element s * " + std::to_string(rees_lambda)
                 + " + l is the pair (s, l)",
             "(s, l)(t, m) = (s P(l) t, m)"});
        emit(make_record("rees",
                         json{{"table", rees_table},
                              {"lambda_size", rees_lambda},
                              {"p", p.images()},
                              {"out", rees_out}},
                         json{{"order", m.table.order()}},
                         timer.elapsed_ms()));
        return success;
      }

      if (check->parsed()) {
        auto const a  = read_table_file(ct_a);
        auto const c  = read_table_file(ct_c);
        auto const p  = parse_mapping(ct_p, a.order());
        auto const pp = parse_mapping(ct_pp, c.order());
        auto const v  = check_right_regular(a, ct_b, c, Couple{p, pp});
        emit(make_record("check-triple",
                         json{{"table_a", ct_a},
                              {"b_size", ct_b},
                              {"table_c", ct_c},
                              {"p", p.images()},
                              {"p_prime", pp.images()}},
                         to_json(v),
                         timer.elapsed_ms()));
        return v.is_right_regular ? success : verdict_false;
      }

      if (search->parsed()) {
        auto const    a = read_table_file(s_a);
        auto const    c = read_table_file(s_c);
        SearchOptions opts;
        opts.require_p_surjective       = s_psurj;
        opts.require_p_prime_surjective = s_ppsurj;
        opts.jobs                       = s_jobs;
        if (s_budget) {
          opts.budget = *s_budget;
        } else if (env_budget) {
          opts.budget = *env_budget;
        }
        auto const result = search_couples(a, s_b, c, opts);
        for (auto const& f : result.found) {
          emit(json{{"command", "search"},
                    {"record", "couple"},
                    {"index", f.index},
                    {"p", f.couple.p.images()},
                    {"p_prime", f.couple.p_prime.images()},
                    {"verdict", to_json(f.verdict)}});
        }
        emit(make_record("search",
                         json{{"table_a", s_a},
                              {"b_size", s_b},
                              {"table_c", s_c},
                              {"require_p_surjective", s_psurj},
                              {"require_pprime_surjective", s_ppsurj}},
                         json{{"record", "summary"},
                              {"couple_space", result.couple_space},
                              {"examined", result.examined},
                              {"found", result.found.size()}},
                         timer.elapsed_ms()));
        return success;
      }

      if (verify->parsed()) {
        auto const id = theorem_from_string(v_theorem);
        Bounds     b  = default_bounds(id);
        if (v_order) {
          b.a_order_max = b.c_order_max = *v_order;
        }
        if (v_c_order) {
          b.c_order_max = *v_c_order;
        }
        if (v_b_size) {
          b.b_size_max = *v_b_size;
        }
        b.existential = v_existential;
        b.seed        = v_seed;
        b.sample_rate = v_rate;
        if (v_budget) {
          b.budget = *v_budget;
        } else if (env_budget) {
          b.budget = *env_budget;
        }
        auto const report = verify_theorem(id, b);
        emit(make_record("verify",
                         json{{"theorem", v_theorem}, {"bounds", to_json(b)}},
                         json{{"report", to_json(report)}},
                         timer.elapsed_ms()));
        return report.failed == 0 ? success : verdict_false;
      }

      if (enumerate->parsed()) {
        Corpus corpus;
        if (e_mode == "naive") {
          corpus = enumerate_naive(e_n);
        } else {
          BacktrackOptions opts;
          opts.jobs = e_jobs;
          if (e_budget) {
            opts.node_budget = *e_budget;
          } else if (env_budget) {
            opts.node_budget = *env_budget;
          }
          corpus = enumerate_backtracking(e_n, opts);
        }
        json files = json::array();
        if (!e_out.empty()) {
          std::filesystem::create_directories(e_out);
          for (std::size_t k = 0; k < corpus.members.size(); ++k) {
            std::ostringstream name;
            name << "order" << e_n << '_' << std::setw(4) << std::setfill('0')
                 << k << ".tbl";
            auto const path = (std::filesystem::path(e_out) / name.str()).string();
            write_table_file(path, corpus.members[k]);
            files.push_back(path);
          }
        }
        emit(make_record("enumerate",
                         json{{"n", e_n}, {"mode", e_mode}, {"out_dir", e_out}},
                         json{{"count", corpus.members.size()}, {"files", files}},
                         timer.elapsed_ms()));
        return success;
      }

      if (named->parsed()) {
        auto const s = named_table(named_name, named_n);
        if (named_out.empty()) {
          out << write_table(s);
        } else {
          write_table_file(named_out, s);
        }
        return success;
      }
    } catch (BudgetExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return budget_error;
    } catch (Exception const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
    return input_error;
  }

}  // namespace rees_lab::cli

#endif  // REES_LAB_TOOLS_CLI_HPP_
