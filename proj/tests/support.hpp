#ifndef HTG_TESTS_SUPPORT_HPP_
#define HTG_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "htg/leavitt.hpp"
#include "htg/matrix.hpp"
#include "htg/words.hpp"

namespace htg::test {

  inline word_type w(std::string const& digits) {
    word_type out;
    for (char c : digits) {
      out.push_back(static_cast<letter_type>(c - '0'));
    }
    return out;
  }

  inline RootedWord rw(std::size_t root, std::string const& digits) {
    return RootedWord{root, w(digits)};
  }

  inline Monomial mono(std::string const& y, std::string const& x) {
    return Monomial{w(y), w(x)};
  }

  inline AlgebraElement element(std::size_t n, std::vector<Monomial> const& terms) {
    return normalize(n, PForm{terms});
  }

  inline word_type random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_length) {
    word_type out(rng() % (max_length + 1));
    for (auto& a : out) {
      a = static_cast<letter_type>(1 + rng() % n);
    }
    return out;
  }

  inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::size_t max_length) {
    return Monomial{random_word(rng, n, max_length), random_word(rng, n, max_length)};
  }

  // Random element with small integer coefficients.
  inline AlgebraElement random_element(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::pair<Monomial, coefficient_type>> terms;
    for (auto k = rng() % 4; k > 0; --k) {
      terms.emplace_back(random_monomial(rng, n, 3),
                         coefficient_type(static_cast<int>(rng() % 5) - 2));
    }
    return normalize(n, terms);
  }

  inline LMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t rows,
                               std::size_t cols) {
    LMatrix a = LMatrix(n, rows, cols).nf();
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        a.at(i, j) = random_element(rng, n);
      }
    }
    return a;
  }

}  // namespace htg::test

#endif  // HTG_TESTS_SUPPORT_HPP_
