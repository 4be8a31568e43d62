#include <algorithm>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "htg/correspondence.hpp"
#include "htg/error.hpp"
#include "htg/iso.hpp"
#include "support.hpp"

using namespace htg;
using htg::test::mono;

namespace {

  AlgebraElement x(std::size_t n, std::size_t i) {
    return AlgebraElement::monomial(n, x_generator(i));
  }
  AlgebraElement y(std::size_t n, std::size_t i) {
    return AlgebraElement::monomial(n, y_generator(i));
  }

  LMatrix one_by_one(AlgebraElement a) {
    LMatrix m = LMatrix(a.n(), 1, 1).nf();
    m.at(0, 0) = std::move(a);
    return m;
  }

  // Smallest l >= 1 with gcd(l, n - 1) = 1 and l r = s mod (n - 1), searching
  // well past n - 1.
  std::optional<std::size_t> smallest_multiplier(std::size_t n, std::size_t r, std::size_t s) {
    for (std::size_t l = 1; l <= 10 * n; ++l) {
      if (std::gcd(l, n - 1) == 1 && (l * r) % (n - 1) == s % (n - 1)) {
        return l;
      }
    }
    return std::nullopt;
  }

  GeneratorSet const& generators_2_4() {
    static GeneratorSet const g = build_generators(2, 4);
    return g;
  }

}  // namespace

TEST_CASE("shift of the identity") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t r = 1; r <= 3; ++r) {
      auto const up = shift_up(LMatrix::identity(n, r));
      CHECK(up.rows() == r + n - 1);
      CHECK(is_identity(up));
      CHECK(is_identity(shift_down(LMatrix::identity(n, r + n - 1))));
      auto const u = shift_matrix(n, r);
      CHECK(is_identity(mat_mul(mat_star(u), u)));
      CHECK(is_identity(mat_mul(u, mat_star(u))));
    }
  }
}

TEST_CASE("shift of a 1 x 1 matrix over L_2") {
  std::mt19937_64 rng(31);
  for (int c = 0; c < 20; ++c) {
    auto const a  = htg::test::random_element(rng, 2);
    auto const up = shift_up(one_by_one(a));
    REQUIRE(up.rows() == 2);
    for (std::size_t i = 1; i <= 2; ++i) {
      for (std::size_t j = 1; j <= 2; ++j) {
        CHECK(to_nf(up.at(i - 1, j - 1), 2) == x(2, i) * a * y(2, j));
      }
    }
    CHECK(equals(shift_down(up), one_by_one(a)));
  }
  // x_1 (y_1 x_2) y_2 = 1
  auto const generic = shift_up(one_by_one(AlgebraElement::monomial(2, mono("1", "2"))));
  CHECK(to_nf(generic.at(0, 1), 2).is_one());
  CHECK(to_nf(generic.at(1, 0), 2).is_zero());
}

TEST_CASE("shifts invert each other on general matrices") {
  std::mt19937_64 rng(32);
  for (int c = 0; c < 30; ++c) {
    auto const n = 2 + rng() % 3;
    auto const r = 1 + rng() % 3;
    auto const a = htg::test::random_matrix(rng, n, r, r);
    auto const b = htg::test::random_matrix(rng, n, r, r);
    auto const h = htg::test::random_matrix(rng, n, r + n - 1, r + n - 1);
    CHECK(equals(shift_down(shift_up(a)), a));
    CHECK(equals(shift_up(shift_down(h)), h));
    CHECK(equals(shift_up(mat_mul(a, b)), mat_mul(shift_up(a), shift_up(b))));
    CHECK(equals(shift_up(mat_add(a, b)), mat_add(shift_up(a), shift_up(b))));
    CHECK(equals(shift_up(mat_star(a)), mat_star(shift_up(a))));
  }
  CHECK_THROWS_AS(shift_down(LMatrix::identity(3, 2)), DimensionMismatch);
  CHECK_THROWS_AS(shift_up(LMatrix(3, 2, 3)), DimensionMismatch);
}

TEST_CASE("find_l") {
  auto const plan = find_l(4, 2, 1);
  CHECK(plan.l == 2);
  CHECK(plan.shift_steps == -1);
  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t s = 1; s <= 6; ++s) {
      CHECK(find_l(2, r, s).l == 1);
    }
  }
  CHECK_THROWS_AS(find_l(4, 1, 3), NotIsomorphic);
  try {
    (void) find_l(4, 1, 3);
  } catch (NotIsomorphic const& e) {
    CHECK(std::string(e.what()).find("gcd(3, 3) = 3") != std::string::npos);
  }
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t r = 1; r <= 9; ++r) {
      for (std::size_t s = 1; s <= 9; ++s) {
        auto const expected = std::gcd(n - 1, r) == std::gcd(n - 1, s)
                                  ? smallest_multiplier(n, r, s)
                                  : std::nullopt;
        if (!expected) {
          CHECK_THROWS_AS(find_l(n, r, s), NotIsomorphic);
          continue;
        }
        auto const p = find_l(n, r, s);
        CHECK(p.l == *expected);
        CHECK(p.shift_steps * static_cast<std::ptrdiff_t>(n - 1)
              == static_cast<std::ptrdiff_t>(s) - static_cast<std::ptrdiff_t>(p.l * r));
      }
    }
  }
}

TEST_CASE("classify") {
  for (std::size_t r = 1; r <= 8; ++r) {
    for (std::size_t s = 1; s <= 8; ++s) {
      CHECK(classify(2, r, 2, s));
    }
  }
  CHECK(classify(4, 1, 4, 2));
  CHECK_FALSE(classify(3, 1, 4, 1));
  CHECK_FALSE(classify(4, 1, 4, 3));
  CHECK(classify(5, 2, 5, 6));
  CHECK_THROWS_AS(classify(1, 1, 2, 1), InvalidArgument);
}

TEST_CASE("template parameters, slots and list") {
  CHECK(template_parameters(2, 4) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(template_parameters(3, 5) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(template_parameters(2, 6) == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK_THROWS_AS(template_parameters(2, 3), InvalidArgument);

  CHECK(template_slots(2, 4).size() == 4);
  CHECK(template_slots(3, 5).size() == 9);
  CHECK(the_list(2, 4) == std::vector<word_type>{{1}, {2}, {3}, {4}});
  CHECK(the_list(3, 5).size() == 9);
  CHECK(the_list(3, 5).front() == word_type{1, 1});

  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t d = 2; d < n; ++d) {
      if (std::gcd(d, n - 1) != 1) {
        continue;
      }
      auto const [q, rho] = template_parameters(d, n);
      CHECK(n == q * d + rho);
      CHECK(2 <= rho);
      CHECK(rho <= d);
      auto const slots = template_slots(d, n);
      CHECK(slots.size() == (d - rho + 2) + (n - q - 2) * d);
      CHECK(slots.size() == the_list(d, n).size());
      CHECK(slots.size() == 1 + (n - 1) * (d - 1));
    }
  }
}

TEST_CASE("every bijection for d = 2, n = 4 satisfies the relations") {
  std::vector<std::size_t> perm{0, 1, 2, 3};
  std::size_t              count = 0;
  do {
    auto const xs = instantiate_templates(2, 4, perm);
    CHECK(satisfies_relations(xs));
    for (auto const& m : xs) {
      CHECK(is_pform_matrix(m));
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 24);
}

TEST_CASE("merge test agrees with the span search for d = 2, n = 4") {
  std::vector<std::size_t> perm{0, 1, 2, 3};
  std::size_t              passing = 0;
  do {
    auto const xs     = instantiate_templates(2, 4, perm);
    auto const merges = passes_merge_test(xs);
    auto const span   = span_check(xs, 6);
    CHECK(merges == span.complete);
    passing += merges ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(passing > 0);
}

TEST_CASE("generators for d = 2, n = 4") {
  auto const& g = generators_2_4();
  CHECK(g.n == 4);
  CHECK(g.d == 2);
  CHECK(g.q == 1);
  CHECK(g.rho == 2);
  CHECK(g.generation == GenerationStatus::verified);
  CHECK(g.witness_length <= 8);
  CHECK(g.assignment.size() == 4);
  CHECK(satisfies_relations(g.X));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(equals(g.Y[i], mat_star(g.X[i])));
  }
  CHECK(span_check(g.X, g.witness_length).complete);
  CHECK_FALSE(g.transcript.empty());
}

TEST_CASE("generators for d = 2, n = 6") {
  auto const g = build_generators(2, 6);
  CHECK(g.q == 2);
  CHECK(g.generation == GenerationStatus::verified);
  CHECK(satisfies_relations(g.X));
}

TEST_CASE("generator search rejects a gcd obstruction and reduces large d") {
  CHECK_THROWS_AS(build_generators(2, 3), InvalidArgument);
  CHECK_THROWS_AS(build_generators(3, 4), InvalidArgument);

  auto const big = build_generators(5, 4);
  CHECK(big.d == 5);
  CHECK(big.base_d == 2);
  CHECK(big.X.front().rows() == 5);
  CHECK(satisfies_relations(big.X));

  auto const trivial = build_generators(1, 3);
  CHECK(trivial.d == 1);
  CHECK(satisfies_relations(trivial.X));

  auto const shifted = build_generators(4, 4);
  CHECK(shifted.base_d == 1);
  CHECK(shifted.d == 4);
  CHECK(satisfies_relations(shifted.X));
}

TEST_CASE("embedding is a unital homomorphism") {
  auto const& g = generators_2_4();
  CHECK(is_identity(embed_entry(PForm{{unit_monomial()}}, g)));
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) {
      auto const product = mat_mul(embed_entry(PForm{{x_generator(i)}}, g),
                                   embed_entry(PForm{{y_generator(j)}}, g));
      CHECK(equals(product, i == j ? LMatrix::identity(4, 2) : LMatrix(4, 2, 2)));
    }
  }
  std::mt19937_64 rng(33);
  for (int c = 0; c < 25; ++c) {
    auto const a = htg::test::random_element(rng, 4);
    auto const b = htg::test::random_element(rng, 4);
    CHECK(equals(embed_entry(a * b, g), mat_mul(embed_entry(a, g), embed_entry(b, g))));
    CHECK(equals(embed_entry(a + b, g), mat_add(embed_entry(a, g), embed_entry(b, g))));
    CHECK(equals(embed_entry(star(a), g), mat_star(embed_entry(a, g))));
  }
}

TEST_CASE("matrix isomorphism preserves identity, P-form and unitarity") {
  std::mt19937_64 rng(34);
  struct Case {
    std::size_t n, r, s;
  };
  for (auto [n, r, s] : {Case{4, 1, 2}, Case{4, 2, 1}, Case{3, 1, 3}, Case{3, 3, 1}, Case{2, 2, 3}}) {
    auto const plan = find_l(n, r, s);
    auto const g    = build_generators(plan.l, n);
    CHECK(is_identity(matrix_iso(plan, g, LMatrix::identity(n, r))));
    for (int c = 0; c < 10; ++c) {
      auto const a     = symbol_to_lmatrix(random_symbol(n, r, 6, rng()));
      auto const image = matrix_iso(plan, g, a);
      CHECK(image.rows() == s);
      CHECK(is_pform_matrix(image));
      CHECK(is_unitary(image));
    }
  }
  // l = 1: nothing but shifts
  auto const plan = find_l(3, 1, 3);
  REQUIRE(plan.l == 1);
  auto const a = symbol_to_lmatrix(random_symbol(3, 1, 6, 4));
  CHECK(equals(matrix_iso(plan, build_generators(1, 3), a), shift_up(a)));
}

TEST_CASE("group isomorphisms") {
  std::mt19937_64 rng(35);
  GroupIsomorphism const forward(4, 1, 2);
  CHECK(forward.plan().l == 2);
  CHECK(forward(Symbol::identity(4, 1)) == Symbol::identity(4, 2));
  for (int c = 0; c < 20; ++c) {
    auto const a = random_symbol(4, 1, 6, rng());
    auto const b = random_symbol(4, 1, 6, rng());
    CHECK(forward(compose(a, b)) == compose(forward(a), forward(b)));
    if (auto const order = element_order(a, 40)) {
      CHECK(element_order(forward(a), 40) == order);
    }
  }

  GroupIsomorphism const up(3, 1, 3);
  GroupIsomorphism const down(3, 3, 1);
  for (int c = 0; c < 20; ++c) {
    auto const a = random_symbol(3, 1, 6, rng());
    auto const b = random_symbol(3, 3, 6, rng());
    CHECK(down(up(a)) == a);
    CHECK(up(down(b)) == b);
  }

  auto const g = random_symbol(2, 1, 3, 1);
  CHECK(group_iso(2, 1, 1, g) == g);
  CHECK(group_iso(2, 1, 4, Symbol::identity(2, 1)) == Symbol::identity(2, 4));
  CHECK_THROWS_AS(group_iso(4, 1, 3, Symbol::identity(4, 1)), NotIsomorphic);
  CHECK_THROWS_AS(forward(Symbol::identity(4, 2)), InvalidArgument);
}
