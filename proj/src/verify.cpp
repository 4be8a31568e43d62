#include "htg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "htg/correspondence.hpp"
#include "htg/error.hpp"
#include "htg/iso.hpp"
#include "htg/leavitt.hpp"
#include "htg/matrix.hpp"
#include "htg/thompson.hpp"
#include "htg/words.hpp"

namespace htg {

  namespace {
    constexpr std::size_t max_details = 5;

    using clock_type = std::chrono::steady_clock;

    class Check {
     public:
      explicit Check(std::string name) : _start(clock_type::now()) {
        _result.name = std::move(name);
      }

      // Runs one case; exceptions count as failures.
      void run(std::function<bool()> const& body, std::function<std::string()> const& what) {
        ++_result.cases;
        std::string error;
        bool        ok = false;
        try {
          ok = body();
        } catch (std::exception const& e) {
          error = std::string(": ") + e.what();
        }
        if (!ok) {
          ++_result.failures;
          if (_result.details.size() < max_details) {
            _result.details.push_back(what() + error);
          }
        }
      }

      void note(std::string line) {
        _result.details.push_back(std::move(line));
      }

      CheckResult finish() {
        _result.seconds
            = std::chrono::duration<double>(clock_type::now() - _start).count();
        return std::move(_result);
      }

     private:
      CheckResult            _result;
      clock_type::time_point _start;
    };

    std::string params(std::size_t n, std::size_t r) {
      return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    }

    std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
      return rng() % bound;
    }

    Expansion random_expansion(std::mt19937_64& rng,
                               std::size_t      n,
                               std::size_t      r,
                               std::size_t      depth) {
      auto b = Expansion::roots(n, r);
      for (std::size_t step = 0; step < depth; ++step) {
        b = simple_expand(b, bounded(rng, b.size()));
      }
      return b;
    }

    Symbol random_element(std::mt19937_64& rng, std::size_t n, std::size_t r,
                          std::size_t depth) {
      return random_symbol(n, r, depth, rng());
    }

    word_type random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_length) {
      word_type w(bounded(rng, max_length + 1));
      for (auto& a : w) {
        // favour the last letter so that rewriting actually happens
        a = static_cast<letter_type>(bounded(rng, 2) == 0 ? n : 1 + bounded(rng, n));
      }
      return w;
    }

    Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::size_t max_length) {
      return Monomial{random_word(rng, n, max_length), random_word(rng, n, max_length)};
    }

    LMatrix random_pform_matrix(std::mt19937_64& rng, std::size_t n, std::size_t r) {
      LMatrix a(n, r, r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          auto& p = std::get<PForm>(a.at(i, j));
          for (auto k = bounded(rng, 3); k > 0; --k) {
            p.terms.push_back(random_monomial(rng, n, 2));
          }
        }
      }
      return a;
    }

    // A symbol for the same element with t extra pairs, by expanding domain
    // and range at the same position.
    Symbol unreduce(Symbol const& s, std::mt19937_64& rng, std::size_t t) {
      auto domain = s.domain();
      auto range  = s.range();
      for (std::size_t k = 0; k < t; ++k) {
        auto const at = bounded(rng, domain.size());
        domain        = simple_expand(domain, at);
        range         = simple_expand(range, at);
      }
      return make_symbol(std::move(domain), std::move(range));
    }

    bool same_element(Symbol const& a, Symbol const& b) {
      return a == b;
    }

    std::size_t brute_gcd(std::size_t a, std::size_t b) {
      std::size_t g = 1;
      for (std::size_t k = 1; k <= std::max(a, b); ++k) {
        if (a % k == 0 && b % k == 0) {
          g = k;
        }
      }
      return g;
    }

    std::vector<std::pair<std::size_t, std::size_t>> const& grid() {
      static std::vector<std::pair<std::size_t, std::size_t>> const cases = [] {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t n = 2; n <= 4; ++n) {
          for (std::size_t r = 1; r <= 3; ++r) {
            out.emplace_back(n, r);
          }
        }
        return out;
      }();
      return cases;
    }
  }  // namespace

  CheckResult check_words(VerifyOptions const& options) {
    Check           check("words: expansions, common refinement, factor");
    std::mt19937_64 rng(options.seed);
    for (auto [n, r] : grid()) {
      for (std::size_t c = 0; c < 50; ++c) {
        auto const a = random_expansion(rng, n, r, options.depth);
        auto const b = random_expansion(rng, n, r, options.depth);
        check.run(
            [&] {
              auto const k = bounded(rng, a.size());
              auto const e = simple_expand(a, k);
              if (e.size() != a.size() + n - 1 || !is_expansion(n, r, e.elements())) {
                return false;
              }
              auto const common = common_expansion(a, b);
              if (!is_expansion(n, r, common.elements())) {
                return false;
              }
              for (auto const& w : common) {
                auto const [i, alpha] = factor(w, a);
                auto const [j, beta]  = factor(w, b);
                if (a[i] * alpha != w || b[j] * beta != w) {
                  return false;
                }
              }
              auto const alpha = random_word(rng, n, 3);
              auto const [i, rest] = factor(a[k] * alpha, a);
              return i == k && rest == alpha;
            },
            [&] { return "words " + params(n, r); });
      }
    }
    return check.finish();
  }

  CheckResult check_algebra(VerifyOptions const& options) {
    Check           check("algebra: normal form confluence, mono_mul, relations");
    std::mt19937_64 rng(options.seed);
    for (std::size_t c = 0; c < 500; ++c) {
      auto const n = 2 + c % 3;
      PForm      p;
      for (auto k = 1 + bounded(rng, 6); k > 0; --k) {
        p.terms.push_back(random_monomial(rng, n, 4));
      }
      auto const reference = normalize(n, p);
      for (std::size_t o = 0; o < 20; ++o) {
        std::mt19937_64 order_rng(rng());
        RewriteOrder    order = [&order_rng](std::size_t count) {
          return static_cast<std::size_t>(order_rng() % count);
        };
        check.run([&] { return normalize(n, p, order) == reference; },
                  [&] { return "confluence failed for " + to_string(p); });
      }
    }
    auto incomparable = [](Monomial const& a, Monomial const& b) {
      RootedWord const u{1, a.x};
      RootedWord const v{1, b.y};
      return !is_prefix(u, v) && !is_prefix(v, u);
    };
    for (std::size_t c = 0; c < 2000; ++c) {
      auto const n = 2 + c % 3;
      auto const a = random_monomial(rng, n, 3);
      auto const b = random_monomial(rng, n, 3);
      check.run([&] { return !mono_mul(a, b).has_value() == incomparable(a, b); },
                [&] { return "mono_mul(" + to_string(a) + ", " + to_string(b) + ")"; });
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      auto sum = AlgebraElement::zero(n);
      for (std::size_t i = 1; i <= n; ++i) {
        auto const xi = AlgebraElement::monomial(n, x_generator(i));
        auto const yi = AlgebraElement::monomial(n, y_generator(i));
        sum += yi * xi;
        for (std::size_t j = 1; j <= n; ++j) {
          auto const yj = AlgebraElement::monomial(n, y_generator(j));
          check.run(
              [&] {
                auto const product = xi * yj;
                return i == j ? product.is_one() : product.is_zero();
              },
              [&] {
                return "x_" + std::to_string(i) + " y_" + std::to_string(j)
                       + " in L_" + std::to_string(n);
              });
        }
      }
      check.run([&] { return sum.is_one(); },
                [&] { return "sum y_j x_j != 1 in L_" + std::to_string(n); });
    }
    return check.finish();
  }

  CheckResult check_group(VerifyOptions const& options) {
    Check           check("group: axioms and reduce confluence");
    std::mt19937_64 rng(options.seed);
    for (auto [n, r] : grid()) {
      auto const one = Symbol::identity(n, r);
      for (std::size_t c = 0; c < 300; ++c) {
        auto const a = random_element(rng, n, r, options.depth);
        auto const b = random_element(rng, n, r, options.depth);
        auto const e = random_element(rng, n, r, options.depth);
        check.run(
            [&] {
              return same_element(compose(compose(a, b), e), compose(a, compose(b, e)));
            },
            [&] { return "associativity " + params(n, r); });
        check.run(
            [&] {
              return same_element(compose(a, one), a) && same_element(compose(one, a), a);
            },
            [&] { return "identity " + params(n, r); });
        check.run(
            [&] {
              auto const inv = invert(a);
              return same_element(compose(a, inv), one) && same_element(compose(inv, a), one);
            },
            [&] { return "inverse " + params(n, r); });
        auto const expanded = unreduce(a, rng, 1 + bounded(rng, 4));
        auto const seed     = rng();
        check.run(
            [&] {
              return reduce_randomized(expanded, seed) == a && reduce(expanded) == a;
            },
            [&] { return "reduce confluence " + params(n, r) + "\n" + to_text(expanded); });
      }
    }
    return check.finish();
  }

  CheckResult check_correspondence(VerifyOptions const& options) {
    Check           check("correspondence: phi multiplicative, unitary, psi inverse");
    std::mt19937_64 rng(options.seed);
    for (auto [n, r] : grid()) {
      for (std::size_t c = 0; c < 200; ++c) {
        auto const a  = random_element(rng, n, r, options.depth);
        auto const b  = random_element(rng, n, r, options.depth);
        auto const fa = symbol_to_lmatrix(a);
        auto const fb = symbol_to_lmatrix(b);
        check.run(
            [&] {
              return equals(symbol_to_lmatrix(compose(a, b)), mat_mul_nf(fa, fb));
            },
            [&] { return "phi(ab) != phi(a) phi(b) " + params(n, r); });
        check.run([&] { return is_unitary(fa); },
                  [&] { return "phi(a) not unitary " + params(n, r); });
        check.run(
            [&] { return matrix_to_symbol(fa, RecognitionMode::direct) == a; },
            [&] { return "psi(phi(a)) != a " + params(n, r); });
        if (c % 10 == 0) {
          check.run(
              [&] { return matrix_to_symbol(fa.nf(), RecognitionMode::evaluate) == a; },
              [&] { return "evaluate mode psi(phi(a)) != a " + params(n, r); });
        }
      }
    }
    return check.finish();
  }

  CheckResult check_shifts(VerifyOptions const& options) {
    Check           check("shifts: round trips, homomorphism, P-form and unitarity");
    std::mt19937_64 rng(options.seed);
    for (auto [n, r] : grid()) {
      auto const s = r + n - 1;
      for (std::size_t c = 0; c < 100; ++c) {
        auto const a = symbol_to_lmatrix(random_element(rng, n, r, options.depth));
        auto const b = symbol_to_lmatrix(random_element(rng, n, r, options.depth));
        auto const g = random_pform_matrix(rng, n, r);
        auto const h = symbol_to_lmatrix(random_element(rng, n, s, options.depth));
        auto const up = shift_up(a);
        check.run([&] { return equals(shift_down(up), a) && equals(shift_down(shift_up(g)), g); },
                  [&] { return "shift_down(shift_up(A)) != A " + params(n, r); });
        check.run([&] { return equals(shift_up(shift_down(h)), h); },
                  [&] { return "shift_up(shift_down(B)) != B " + params(n, s); });
        check.run([&] { return is_pform_matrix(up) && is_unitary(up); },
                  [&] { return "shift_up(A) lost P-form or unitarity " + params(n, r); });
        check.run(
            [&] {
              return equals(shift_up(mat_mul(a, b)), mat_mul(up, shift_up(b)))
                     && equals(shift_up(mat_mul(g, a)), mat_mul(shift_up(g), up));
            },
            [&] { return "shift_up not multiplicative " + params(n, r); });
        check.run(
            [&] {
              return equals(shift_up(mat_star(a)), mat_star(up))
                     && equals(shift_up(mat_star(g)), mat_star(shift_up(g)));
            },
            [&] { return "shift_up does not commute with star " + params(n, r); });
      }
    }
    return check.finish();
  }

  CheckResult check_generators(VerifyOptions const& options) {
    Check check("generators: relations exact, span witnesses, 60 s each");
    std::vector<std::pair<std::size_t, std::size_t>> cases{{2, 4}, {3, 5}, {2, 6}};
    bool const explicit_case = options.n && options.d;
    if (explicit_case) {
      cases = {{*options.d, *options.n}};
    }
    GeneratorOptions const generator_options{options.budget, options.span_bound, true};
    for (auto [d, n] : cases) {
      auto const label = "(d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
      check.run(
          [&] {
            auto const start   = clock_type::now();
            auto const g       = build_generators(d, n, generator_options);
            auto const seconds = std::chrono::duration<double>(clock_type::now() - start).count();
            if (explicit_case) {
              for (auto const& line : g.transcript) {
                check.note(line);
              }
            }
            auto const verified = g.generation == GenerationStatus::verified;
            check.note(label + ": " + (verified ? "verified" : "unverified")
                       + " at length " + std::to_string(g.witness_length) + " in "
                       + std::to_string(seconds) + " s");
            return verified && satisfies_relations(g.X) && seconds < 60.0;
          },
          [&] { return label + " failed"; });
    }
    return check.finish();
  }

  CheckResult check_main_theorem(VerifyOptions const& options) {
    Check           check("group isomorphisms: homomorphism, inverse, injective");
    std::mt19937_64 rng(options.seed);
    GeneratorOptions const generator_options{options.budget, options.span_bound, true};
    auto order_limit = std::size_t{60};

    auto homomorphism = [&](GroupIsomorphism const& iso, std::size_t n, std::size_t r) {
      auto const s = iso.plan().s;
      auto const label = "(" + std::to_string(n) + "," + std::to_string(r) + ","
                         + std::to_string(s) + ")";
      check.run([&] { return iso(Symbol::identity(n, r)) == Symbol::identity(n, s); },
                [&] { return "identity not preserved " + label; });
      for (std::size_t c = 0; c < 100; ++c) {
        auto const a = random_element(rng, n, r, options.depth);
        auto const b = random_element(rng, n, r, options.depth);
        check.run([&] { return iso(compose(a, b)) == compose(iso(a), iso(b)); },
                  [&] { return "homomorphism law " + label + "\n" + to_text(a) + to_text(b); });
        if (auto const order = element_order(a, order_limit)) {
          check.run([&] { return element_order(iso(a), order_limit) == order; },
                    [&] { return "element order changed " + label; });
        }
      }
      std::vector<Symbol> sample;
      while (sample.size() < 20) {
        auto const a = random_element(rng, n, r, options.depth);
        if (std::find(sample.begin(), sample.end(), a) == sample.end()) {
          sample.push_back(a);
        }
      }
      check.run(
          [&] {
            std::set<std::string> images;
            for (auto const& a : sample) {
              images.insert(to_text(iso(a)));
            }
            return images.size() == sample.size();
          },
          [&] { return "distinct elements collide " + label; });
    };

    GroupIsomorphism const iso412(4, 1, 2, generator_options);
    homomorphism(iso412, 4, 1);

    GroupIsomorphism const iso313(3, 1, 3, generator_options);
    GroupIsomorphism const iso331(3, 3, 1, generator_options);
    homomorphism(iso313, 3, 1);
    for (std::size_t c = 0; c < 100; ++c) {
      auto const a = random_element(rng, 3, 1, options.depth);
      auto const b = random_element(rng, 3, 3, options.depth);
      check.run([&] { return iso331(iso313(a)) == a && iso313(iso331(b)) == b; },
                [&] { return "inverse plan does not round trip (3,1,3)\n" + to_text(a); });
    }
    return check.finish();
  }

  CheckResult check_classification(VerifyOptions const&) {
    Check check("classification grid n, m <= 6, r, s <= 8");
    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::size_t m = 2; m <= 6; ++m) {
        for (std::size_t r = 1; r <= 8; ++r) {
          for (std::size_t s = 1; s <= 8; ++s) {
            auto const expected = m == n && brute_gcd(n - 1, r) == brute_gcd(n - 1, s);
            check.run(
                [&] {
                  if (classify(n, r, m, s) != expected) {
                    return false;
                  }
                  if (m != n) {
                    return true;
                  }
                  try {
                    auto const plan = find_l(n, r, s);
                    auto const k    = static_cast<std::ptrdiff_t>(n - 1);
                    return expected && std::gcd(plan.l, n - 1) == 1
                           && plan.shift_steps * k
                                  == static_cast<std::ptrdiff_t>(s)
                                         - static_cast<std::ptrdiff_t>(plan.l * r);
                  } catch (NotIsomorphic const&) {
                    return !expected;
                  }
                },
                [&] {
                  return "classify(" + std::to_string(n) + "," + std::to_string(r) + ","
                         + std::to_string(m) + "," + std::to_string(s) + ")";
                });
          }
        }
      }
    }
    for (std::size_t r = 1; r <= 8; ++r) {
      for (std::size_t s = 1; s <= 8; ++s) {
        check.run([&] { return classify(2, r, 2, s); },
                  [&] { return "G_{2," + std::to_string(r) + "} vs G_{2," + std::to_string(s) + "}"; });
      }
    }
    check.run([] { return classify(4, 1, 4, 2); }, [] { return "G_{4,1} vs G_{4,2}"; });
    return check.finish();
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"words",          "leavitt", "thompson",
                                                "correspondence", "iso",     "all"};
    return names;
  }

  std::vector<CheckResult> run_suite(std::string_view suite, VerifyOptions const& options) {
    std::vector<CheckResult> out;
    bool const               all = suite == "all";
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
      throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
    }
    if (all || suite == "words") {
      out.push_back(check_words(options));
    }
    if (all || suite == "leavitt") {
      out.push_back(check_algebra(options));
    }
    if (all || suite == "thompson") {
      out.push_back(check_group(options));
    }
    if (all || suite == "correspondence") {
      out.push_back(check_correspondence(options));
    }
    if (all || suite == "iso") {
      if (options.n && options.d) {
        out.push_back(check_generators(options));
        return out;
      }
      out.push_back(check_shifts(options));
      out.push_back(check_generators(options));
      out.push_back(check_main_theorem(options));
      out.push_back(check_classification(options));
    }
    return out;
  }

}  // namespace htg
