#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "htg/correspondence.hpp"
#include "htg/error.hpp"
#include "htg/iso.hpp"
#include "htg/json.hpp"
#include "htg/thompson.hpp"
#include "htg/verify.hpp"

namespace htg {

  namespace {
    constexpr int exit_ok       = 0;
    constexpr int exit_negative = 1;
    constexpr int exit_usage    = 2;

    Symbol read_symbol(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InvalidArgument("cannot open " + path);
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_symbol(buffer.str());
    }

    struct Flags {
      bool                       json        = false;
      std::string                file_a;
      std::string                file_b;
      std::optional<std::size_t> n, r, s, m, d;
      std::uint64_t              seed        = 7;
      std::size_t                depth       = 6;
      std::size_t                budget      = 1'000'000;
      std::size_t                span_bound  = 8;
      bool                       emit_matrix = false;
      std::string                suite;
    };

    void print_json(std::ostream& out, nlohmann::json const& j) {
      out << j.dump(2) << '\n';
    }

    int cmd_compose(Flags const& f, std::ostream& out) {
      auto const a      = read_symbol(f.file_a);
      auto const b      = read_symbol(f.file_b);
      auto const result = compose(a, b);
      if (f.json) {
        print_json(out, to_json(result));
      } else {
        out << to_text(result);
      }
      return exit_ok;
    }

    int cmd_map(Flags const& f, std::ostream& out) {
      auto const g = read_symbol(f.file_a);
      if ((f.n && *f.n != g.n()) || (f.r && *f.r != g.r())) {
        throw InvalidArgument("the symbol is in G_{" + std::to_string(g.n()) + ","
                              + std::to_string(g.r()) + "}, not in G_{"
                              + std::to_string(f.n.value_or(g.n())) + ","
                              + std::to_string(f.r.value_or(g.r())) + "}");
      }
      GroupIsomorphism const iso(g.n(), g.r(), *f.s, GeneratorOptions{f.budget, f.span_bound, true});
      auto const             image = iso(g);

      nlohmann::json stages = nlohmann::json::array();
      if (f.emit_matrix) {
        auto const& plan  = iso.plan();
        auto        stage = symbol_to_lmatrix(g);
        stages.push_back({{"stage", "phi"}, {"matrix", to_json(stage)}});
        if (plan.l != 1) {
          stage = embed_blocks(stage, iso.generators());
          stages.push_back({{"stage", "embed"}, {"matrix", to_json(stage)}});
        }
        for (std::ptrdiff_t k = 0; k < plan.shift_steps; ++k) {
          stage = shift_up(stage);
          stages.push_back({{"stage", "shift_up"}, {"matrix", to_json(stage)}});
        }
        for (std::ptrdiff_t k = 0; k < -plan.shift_steps; ++k) {
          stage = shift_down(stage);
          stages.push_back({{"stage", "shift_down"}, {"matrix", to_json(stage)}});
        }
      }
      auto const& plan = iso.plan();
      nlohmann::json const plan_json{{"n", plan.n},
                                     {"r", plan.r},
                                     {"s", plan.s},
                                     {"l", plan.l},
                                     {"shift_steps", plan.shift_steps}};
      if (f.json) {
        nlohmann::json j{{"plan", plan_json}, {"symbol", to_json(image)}};
        if (f.emit_matrix) {
          j["matrices"] = stages;
          if (plan.l != 1) {
            j["generators"] = to_json(iso.generators());
          }
        }
        print_json(out, j);
        return exit_ok;
      }
      out << to_text(image);
      if (f.emit_matrix) {
        nlohmann::json j{{"plan", plan_json}, {"matrices", stages}};
        if (plan.l != 1) {
          j["generators"] = to_json(iso.generators());
        }
        print_json(out, j);
      }
      return exit_ok;
    }

    int cmd_classify(Flags const& f, std::ostream& out) {
      auto const answer = classify(*f.n, *f.r, *f.m, *f.s);
      if (f.json) {
        print_json(out, {{"n", *f.n}, {"r", *f.r}, {"m", *f.m}, {"s", *f.s},
                         {"isomorphic", answer}});
      } else {
        out << (answer ? "isomorphic" : "not-isomorphic") << '\n';
      }
      return answer ? exit_ok : exit_negative;
    }

    int cmd_verify(Flags const& f, std::ostream& out) {
      VerifyOptions options;
      options.seed       = f.seed;
      options.depth      = f.depth;
      options.budget     = f.budget;
      options.span_bound = f.span_bound;
      options.n          = f.n;
      options.d          = f.d;
      auto const  results = run_suite(f.suite, options);
      std::size_t failed  = 0;
      for (auto const& c : results) {
        failed += c.passed() ? 0 : 1;
      }
      if (f.json) {
        auto checks = nlohmann::json::array();
        for (auto const& c : results) {
          checks.push_back(to_json(c));
        }
        print_json(out, {{"suite", f.suite},
                         {"seed", f.seed},
                         {"checks", checks},
                         {"passed", failed == 0}});
      } else {
        for (auto const& c : results) {
          std::ostringstream seconds;
          seconds.precision(2);
          seconds << std::fixed << c.seconds;
          out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases
              << " cases, " << c.failures << " failed, " << seconds.str() << " s)\n";
          for (auto const& line : c.details) {
            out << "  " << line << '\n';
          }
        }
        out << "suite " << f.suite << ": " << results.size() - failed << "/"
            << results.size() << " checks passed\n";
      }
      return failed == 0 ? exit_ok : exit_negative;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Higman-Thompson groups as unitary matrices over Leavitt algebras", "htg"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_flag("--json", f.json, "Print JSON instead of text");

    auto const arity = CLI::Range(std::size_t{2}, std::size_t{max_arity});
    auto const size  = CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());

    auto* compose_cmd = app.add_subcommand("compose", "Print the reduced product a b (a first)");
    compose_cmd->add_option("a", f.file_a, "Symbol file")->required()->check(CLI::ExistingFile);
    compose_cmd->add_option("b", f.file_b, "Symbol file")->required()->check(CLI::ExistingFile);

    auto* map_cmd = app.add_subcommand("map", "Map a symbol from G_{n,r} to G_{n,s}");
    map_cmd->add_option("g", f.file_a, "Symbol file")->required()->check(CLI::ExistingFile);
    map_cmd->add_option("--n", f.n, "Arity (checked against the file)")->check(arity);
    map_cmd->add_option("--r", f.r, "Source size (checked against the file)")->check(size);
    map_cmd->add_option("--s", f.s, "Target size")->required()->check(size);
    map_cmd->add_option("--budget", f.budget, "Generator search budget")
        ->capture_default_str()
        ->check(size);
    map_cmd->add_option("--span-bound", f.span_bound, "Span search word length")
        ->capture_default_str();
    map_cmd->add_flag("--emit-matrix", f.emit_matrix, "Also dump the intermediate matrices");

    auto* classify_cmd = app.add_subcommand("classify", "Is G_{n,r} isomorphic to G_{m,s}?");
    classify_cmd->add_option("--n", f.n)->required()->check(arity);
    classify_cmd->add_option("--r", f.r)->required()->check(size);
    classify_cmd->add_option("--m", f.m)->required()->check(arity);
    classify_cmd->add_option("--s", f.s)->required()->check(size);

    auto* verify_cmd = app.add_subcommand("verify", "Run seeded property suites");
    verify_cmd->add_option("suite", f.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--seed", f.seed)->capture_default_str();
    verify_cmd->add_option("--depth", f.depth, "Expansions per side of random symbols")
        ->capture_default_str();
    verify_cmd->add_option("--budget", f.budget, "Generator search budget")
        ->capture_default_str()
        ->check(size);
    verify_cmd->add_option("--span-bound", f.span_bound, "Span search word length")
        ->capture_default_str();
    verify_cmd->add_option("--n", f.n, "With --d: only run the generator search")->check(arity);
    verify_cmd->add_option("--d", f.d, "With --n: only run the generator search")->check(size);

    std::vector<char const*> argv{"htg"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_usage;
    }

    try {
      if (compose_cmd->parsed()) {
        return cmd_compose(f, out);
      }
      if (map_cmd->parsed()) {
        return cmd_map(f, out);
      }
      if (classify_cmd->parsed()) {
        return cmd_classify(f, out);
      }
      return cmd_verify(f, out);
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (NotIsomorphic const& e) {
      err << "error: " << e.what() << '\n';
      return exit_negative;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

}  // namespace htg
