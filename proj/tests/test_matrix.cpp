#include <random>

#include "catch_amalgamated.hpp"
#include "htg/correspondence.hpp"
#include "htg/error.hpp"
#include "htg/matrix.hpp"
#include "htg/thompson.hpp"
#include "support.hpp"

using namespace htg;
using htg::test::mono;

namespace {

  LMatrix pform_matrix(std::size_t n, std::vector<std::vector<PForm>> const& rows) {
    LMatrix a(n, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        a.at(i, j) = rows[i][j];
      }
    }
    return a;
  }

  LMatrix random_pform_matrix(std::mt19937_64& rng, std::size_t n, std::size_t rows,
                              std::size_t cols) {
    LMatrix a(n, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        auto& p = std::get<PForm>(a.at(i, j));
        for (auto k = rng() % 3; k > 0; --k) {
          p.terms.push_back(htg::test::random_monomial(rng, n, 2));
        }
      }
    }
    return a;
  }

}  // namespace

TEST_CASE("identity is neutral") {
  std::mt19937_64 rng(1);
  auto const      a = htg::test::random_matrix(rng, 3, 2, 3);
  CHECK(equals(mat_mul(LMatrix::identity(3, 2), a), a));
  CHECK(equals(mat_mul(a, LMatrix::identity(3, 3)), a));
  CHECK(is_identity(LMatrix::identity(2, 4)));
  CHECK_FALSE(is_identity(LMatrix(2, 2, 2)));
}

TEST_CASE("column of x's against row of y's") {
  auto const column = pform_matrix(2, {{PForm{{mono("", "1")}}}, {PForm{{mono("", "2")}}}});
  auto const row    = pform_matrix(2, {{PForm{{mono("1", "")}}, PForm{{mono("2", "")}}}});
  CHECK(equals(mat_mul(column, row), LMatrix::identity(2, 2)));
  CHECK(equals(mat_mul(row, column), LMatrix::identity(2, 1)));
  CHECK(equals(mat_star(column), row));
}

TEST_CASE("star examples") {
  CHECK(equals(mat_star(LMatrix::identity(3, 2)), LMatrix::identity(3, 2)));
  auto const a = pform_matrix(2, {{PForm{{mono("1", "")}}, PForm{}}, {PForm{}, PForm{{mono("2", "")}}}});
  auto const b = pform_matrix(2, {{PForm{{mono("", "1")}}, PForm{}}, {PForm{}, PForm{{mono("", "2")}}}});
  CHECK(equals(mat_star(a), b));
  CHECK(is_pform_matrix(mat_star(a)));
}

TEST_CASE("products, sums and star on random matrices") {
  std::mt19937_64 rng(2);
  for (int c = 0; c < 40; ++c) {
    auto const n = 2 + rng() % 3;
    auto const a = htg::test::random_matrix(rng, n, 2, 3);
    auto const b = htg::test::random_matrix(rng, n, 3, 2);
    auto const e = htg::test::random_matrix(rng, n, 2, 2);
    CHECK(equals(mat_star(mat_star(a)), a));
    CHECK(equals(mat_star(mat_mul(a, b)), mat_mul(mat_star(b), mat_star(a))));
    CHECK(equals(mat_mul(mat_mul(a, b), e), mat_mul(a, mat_mul(b, e))));
    CHECK(equals(mat_mul(e, mat_add(e, e)), mat_add(mat_mul(e, e), mat_mul(e, e))));
  }
}

TEST_CASE("P-form and normal-form products agree") {
  std::mt19937_64 rng(3);
  for (int c = 0; c < 100; ++c) {
    auto const n = 2 + rng() % 3;
    auto const a = random_pform_matrix(rng, n, 2, 3);
    auto const b = random_pform_matrix(rng, n, 3, 2);
    auto const fast = mat_mul(a, b);
    CHECK(is_pform_matrix(fast));
    CHECK(std::holds_alternative<PForm>(fast.at(0, 0)));
    CHECK(equals(fast, mat_mul_nf(a, b)));
    CHECK(equals(fast, mat_mul(a.nf(), b.nf())));
  }
}

TEST_CASE("unitarity") {
  CHECK(is_unitary(LMatrix::identity(2, 3)));
  auto const y1 = pform_matrix(2, {{PForm{{mono("1", "")}}}});
  CHECK_FALSE(is_unitary(y1));
  CHECK_THROWS_AS(UnitaryPMatrix(y1), NotUnitary);
  CHECK_THROWS_AS(UnitaryPMatrix(LMatrix(2, 2, 3)), DimensionMismatch);

  std::mt19937_64 rng(4);
  for (int c = 0; c < 60; ++c) {
    auto const n = 2 + rng() % 3;
    auto const r = 1 + rng() % 3;
    auto const x = symbol_to_lmatrix(random_symbol(n, r, 6, rng()));
    auto const y = symbol_to_lmatrix(random_symbol(n, r, 6, rng()));
    CHECK(is_unitary(x));
    CHECK(is_pform_matrix(x));
    CHECK(is_unitary(mat_mul(x, y)));
    CHECK(is_identity(mat_mul(x, mat_star(x))));
    CHECK_NOTHROW(UnitaryPMatrix(x));
  }
}

TEST_CASE("P-form detection") {
  CHECK(is_pform_matrix(LMatrix::identity(2, 2)));
  auto a = LMatrix::identity(2, 2).nf();
  CHECK(is_pform_matrix(a));
  std::vector<std::pair<Monomial, coefficient_type>> negative{{unit_monomial(), -1}};
  a.at(0, 0) = normalize(2, negative);
  CHECK_FALSE(is_pform_matrix(a));
  // y_2 x_2 = 1 - y_1 x_1 carries a -1 once normalized
  auto b = LMatrix(2, 1, 1);
  b.at(0, 0) = normalize(2, PForm{{mono("2", "2")}});
  CHECK_FALSE(is_pform_matrix(b));
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(mat_mul(LMatrix(2, 2, 3), LMatrix(2, 2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_add(LMatrix(2, 2, 3), LMatrix(2, 3, 2)), DimensionMismatch);
  CHECK_THROWS_AS(mat_mul(LMatrix(2, 2, 2), LMatrix(3, 2, 2)), InvalidArgument);
}

TEST_CASE("entry text") {
  auto const a = pform_matrix(2, {{PForm{{mono("1", "2"), mono("2", "1")}}, PForm{}}});
  CHECK(to_string(a.at(0, 0)) == "y[1]x[2] + y[2]x[1]");
  CHECK(to_string(a.at(0, 1)) == "0");
  CHECK(to_string(a.nf().at(0, 0)) == "y[1]x[2] + y[2]x[1]");
}
