#include <algorithm>
#include <optional>
#include <random>

#include "catch_amalgamated.hpp"
#include "htg/error.hpp"
#include "htg/leavitt.hpp"
#include "support.hpp"

using namespace htg;
using htg::test::element;
using htg::test::mono;

namespace {

  // Product of monomials by spelling both out as strings of generators and
  // cancelling x_a y_b -> delta_ab from the left.
  std::optional<Monomial> product_by_cancellation(Monomial const& a, Monomial const& b) {
    struct Letter {
      bool        is_x;
      letter_type index;
    };
    std::vector<Letter> spelled;
    auto spell = [&](Monomial const& m) {
      for (auto i : m.y) {
        spelled.push_back({false, i});
      }
      for (auto it = m.x.rbegin(); it != m.x.rend(); ++it) {
        spelled.push_back({true, *it});
      }
    };
    spell(a);
    spell(b);
    std::vector<Letter> stack;
    for (auto const& letter : spelled) {
      if (!letter.is_x && !stack.empty() && stack.back().is_x) {
        if (stack.back().index != letter.index) {
          return std::nullopt;
        }
        stack.pop_back();
        continue;
      }
      stack.push_back(letter);
    }
    Monomial result;
    for (auto const& letter : stack) {
      if (letter.is_x) {
        result.x.insert(result.x.begin(), letter.index);
      } else {
        REQUIRE(result.x.empty());
        result.y.push_back(letter.index);
      }
    }
    return result;
  }

  // Normal form of one monomial: strip the common run of trailing n's and
  // expand y_{U n^t} x_{V n^t} = y_U x_V - sum_{s<t} sum_{k<n} y_{U n^s k} x_{V n^s k}.
  AlgebraElement normal_form_of_monomial(std::size_t n, Monomial const& m) {
    auto u = m.y;
    auto v = m.x;
    std::size_t t = 0;
    while (!u.empty() && !v.empty() && u.back() == n && v.back() == n) {
      u.pop_back();
      v.pop_back();
      ++t;
    }
    std::vector<std::pair<Monomial, coefficient_type>> terms{{Monomial{u, v}, 1}};
    for (std::size_t s = 0; s < t; ++s) {
      for (std::size_t k = 1; k < n; ++k) {
        auto uy = u;
        auto vx = v;
        uy.insert(uy.end(), s, static_cast<letter_type>(n));
        vx.insert(vx.end(), s, static_cast<letter_type>(n));
        uy.push_back(static_cast<letter_type>(k));
        vx.push_back(static_cast<letter_type>(k));
        terms.emplace_back(Monomial{uy, vx}, -1);
      }
    }
    // every term above is already normal, so this only collects
    return normalize(n, terms);
  }

  bool is_normal(AlgebraElement const& a) {
    return std::none_of(a.terms().begin(), a.terms().end(), [&](auto const& kv) {
      return kv.second == 0 || is_forbidden(kv.first, a.n());
    });
  }

}  // namespace

TEST_CASE("mono_mul examples") {
  CHECK(mono_mul(mono("", "1"), mono("1", "")) == unit_monomial());
  CHECK_FALSE(mono_mul(mono("", "1"), mono("2", "")).has_value());
  CHECK(mono_mul(mono("1", "2"), mono("21", "")) == mono("11", ""));
  CHECK(mono_mul(mono("1", "21"), mono("2", "3")) == mono("1", "31"));
  CHECK(mono_mul(mono("", "12"), mono("12", "")) == unit_monomial());
}

TEST_CASE("mono_mul agrees with cancellation of spelled-out generators") {
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<word_type> words{{}};
    for (std::size_t len = 1; len <= 2; ++len) {
      std::vector<word_type> next;
      for (auto const& u : words) {
        if (u.size() + 1 == len) {
          for (std::size_t a = 1; a <= n; ++a) {
            auto v = u;
            v.push_back(static_cast<letter_type>(a));
            next.push_back(v);
          }
        }
      }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (auto const& ay : words) {
      for (auto const& ax : words) {
        for (auto const& by : words) {
          for (auto const& bx : words) {
            Monomial const a{ay, ax};
            Monomial const b{by, bx};
            CHECK(mono_mul(a, b) == product_by_cancellation(a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("mono_mul vanishes exactly on prefix-incomparable inner words") {
  std::mt19937_64 rng(2);
  for (int c = 0; c < 2000; ++c) {
    auto const n = 2 + rng() % 4;
    auto const a = htg::test::random_monomial(rng, n, 4);
    auto const b = htg::test::random_monomial(rng, n, 4);
    auto const comparable = is_prefix(RootedWord{1, a.x}, RootedWord{1, b.y})
                            || is_prefix(RootedWord{1, b.y}, RootedWord{1, a.x});
    CHECK(mono_mul(a, b).has_value() == comparable);
  }
}

TEST_CASE("normalize examples") {
  auto const one = AlgebraElement::one(2);
  CHECK(element(2, {mono("1", "1"), mono("2", "2")}) == one);
  CHECK(element(2, {unit_monomial()}) == one);
  auto const rewritten = element(2, {mono("2", "2")});
  CHECK(rewritten == one - AlgebraElement::monomial(2, mono("1", "1")));
  CHECK(rewritten + AlgebraElement::monomial(2, mono("1", "1")) == one);
  CHECK(to_string(rewritten) == "1 - y[1]x[1]");
  CHECK(element(3, {mono("3", "3"), mono("1", "1"), mono("2", "2")}) == AlgebraElement::one(3));
}

TEST_CASE("normalize matches the closed form on single monomials") {
  std::mt19937_64 rng(8);
  for (int c = 0; c < 1000; ++c) {
    auto const n = 2 + rng() % 4;
    auto       m = htg::test::random_monomial(rng, n, 3);
    auto const t = rng() % 4;
    m.y.insert(m.y.end(), t, static_cast<letter_type>(n));
    m.x.insert(m.x.end(), t, static_cast<letter_type>(n));
    auto const nf = normalize(n, PForm{{m}});
    CHECK(nf == normal_form_of_monomial(n, m));
    CHECK(is_normal(nf));
  }
}

TEST_CASE("normalize is confluent and order independent") {
  std::mt19937_64 rng(4);
  for (int c = 0; c < 200; ++c) {
    auto const n = 2 + rng() % 3;
    PForm      p;
    for (auto k = 1 + rng() % 6; k > 0; --k) {
      p.terms.push_back(htg::test::random_monomial(rng, n, 4));
    }
    auto const reference = normalize(n, p);
    CHECK(is_normal(reference));
    for (int o = 0; o < 20; ++o) {
      std::mt19937_64 order_rng(rng());
      auto const      other
          = normalize(n, p, [&](std::size_t count) { return order_rng() % count; });
      CHECK(other == reference);
    }
    auto shuffled = p;
    std::shuffle(shuffled.terms.begin(), shuffled.terms.end(), rng);
    CHECK(normalize(n, shuffled) == reference);
  }
}

TEST_CASE("defining relations") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto sum = AlgebraElement::zero(n);
    for (std::size_t i = 1; i <= n; ++i) {
      auto const xi = AlgebraElement::monomial(n, x_generator(i));
      auto const yi = AlgebraElement::monomial(n, y_generator(i));
      for (std::size_t j = 1; j <= n; ++j) {
        auto const yj = AlgebraElement::monomial(n, y_generator(j));
        CHECK((xi * yj) == (i == j ? AlgebraElement::one(n) : AlgebraElement::zero(n)));
      }
      sum += yi * xi;
    }
    CHECK(sum.is_one());
  }
}

TEST_CASE("ring laws on random elements") {
  std::mt19937_64 rng(6);
  for (int c = 0; c < 150; ++c) {
    auto const n = 2 + rng() % 3;
    auto const a = htg::test::random_element(rng, n);
    auto const b = htg::test::random_element(rng, n);
    auto const e = htg::test::random_element(rng, n);
    CHECK((a * b) * e == a * (b * e));
    CHECK(a * (b + e) == a * b + a * e);
    CHECK(AlgebraElement::one(n) * a == a);
    CHECK(a * AlgebraElement::one(n) == a);
    CHECK(star(star(a)) == a);
    CHECK(star(a * b) == star(b) * star(a));
    CHECK(a - a == AlgebraElement::zero(n));
    auto sum_of_squares = AlgebraElement::zero(n);
    for (std::size_t k = 1; k <= n; ++k) {
      sum_of_squares += AlgebraElement::monomial(n, mono(std::to_string(k), std::to_string(k)));
    }
    CHECK(sum_of_squares * a == a);
  }
}

TEST_CASE("star and equality examples") {
  CHECK(star(mono("12", "")) == mono("", "12"));
  CHECK(star(AlgebraElement::monomial(3, mono("12", "3")))
        == AlgebraElement::monomial(3, mono("3", "12")));
  auto const a = element(2, {mono("1", "")});
  CHECK(a == a);
  CHECK_FALSE(a == element(2, {mono("2", "")}));
  CHECK(element(2, {mono("2", "2"), mono("1", "1")}).is_one());
}

TEST_CASE("text forms") {
  CHECK(to_string(unit_monomial()) == "1");
  CHECK(to_string(mono("12", "21")) == "y[1,2]x[2,1]");
  CHECK(to_string(mono("", "3")) == "x[3]");
  CHECK(to_string(PForm{}) == "0");
  CHECK(to_string(PForm{{mono("1", "2"), mono("2", "1")}}) == "y[1]x[2] + y[2]x[1]");
  CHECK(to_string(AlgebraElement::zero(2)) == "0");
  std::vector<std::pair<Monomial, coefficient_type>> terms{{mono("1", ""), 2}};
  CHECK(to_string(normalize(2, terms)) == "2*y[1]");
}

TEST_CASE("letters outside the alphabet are rejected") {
  CHECK_THROWS_AS(normalize(2, PForm{{mono("3", "")}}), InvalidArgument);
}
