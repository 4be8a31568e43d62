#ifndef HTG_LEAVITT_HPP_
#define HTG_LEAVITT_HPP_

// Exact arithmetic in the Leavitt algebra L_n, the unital algebra on
// x_1, ..., x_n, y_1, ..., y_n subject to x_i y_j = delta_ij and
// y_1 x_1 + ... + y_n x_n = 1.
//
// For multiindices I = (i_1, ..., i_k) we write y_I = y_{i_1} ... y_{i_k} and
// x_I = x_{i_k} ... x_{i_1}.  Every element is a linear combination of the
// monomials y_I x_J.  The normal form uses the basis of those monomials y_I x_J
// for which I and J do not both end in the letter n; the remaining ones are
// rewritten with y_n x_n = 1 - (y_1 x_1 + ... + y_{n-1} x_{n-1}).

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "htg/words.hpp"

namespace htg {

  using coefficient_type = boost::multiprecision::cpp_int;

  //! The monomial y_I x_J with I = y and J = x.
  struct Monomial {
    word_type y;
    word_type x;

    //! Shorter monomials first, then lexicographic in (y, x).
    std::strong_ordering operator<=>(Monomial const& other) const;
    bool                 operator==(Monomial const&) const = default;

    [[nodiscard]] std::size_t length() const noexcept {
      return y.size() + x.size();
    }
  };

  [[nodiscard]] inline Monomial unit_monomial() {
    return Monomial{};
  }
  [[nodiscard]] inline Monomial x_generator(std::size_t i) {
    return Monomial{{}, {static_cast<letter_type>(i)}};
  }
  [[nodiscard]] inline Monomial y_generator(std::size_t i) {
    return Monomial{{static_cast<letter_type>(i)}, {}};
  }

  //! The product of two monomials, or nullopt when it vanishes.
  [[nodiscard]] std::optional<Monomial> mono_mul(Monomial const& a,
                                                 Monomial const& b);

  //! (y_I x_J)^* = y_J x_I.
  [[nodiscard]] inline Monomial star(Monomial const& m) {
    return Monomial{m.x, m.y};
  }

  //! True when I and J are both nonempty and both end in n.
  [[nodiscard]] bool is_forbidden(Monomial const& m, std::size_t n) noexcept;

  [[nodiscard]] std::string to_string(Monomial const& m);

  //! A sum of monomials with coefficient +1.  The empty sum is zero.
  struct PForm {
    std::vector<Monomial> terms;

    [[nodiscard]] bool is_zero() const noexcept {
      return terms.empty();
    }
    bool operator==(PForm const&) const = default;
  };

  [[nodiscard]] PForm star(PForm const& p);

  //! All nonzero products of a term of a with a term of b, in order.
  [[nodiscard]] PForm pform_mul(PForm const& a, PForm const& b);

  [[nodiscard]] PForm pform_add(PForm const& a, PForm const& b);

  [[nodiscard]] std::string to_string(PForm const& p);

  //! A linear combination of normal basis monomials with nonzero integer
  //! coefficients.
  class AlgebraElement {
   public:
    using term_map = std::map<Monomial, coefficient_type>;

    explicit AlgebraElement(std::size_t n);

    [[nodiscard]] static AlgebraElement zero(std::size_t n) {
      return AlgebraElement(n);
    }
    [[nodiscard]] static AlgebraElement one(std::size_t n);

    //! The normal form of a single monomial.
    [[nodiscard]] static AlgebraElement monomial(std::size_t     n,
                                                 Monomial const& m);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] term_map const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }
    [[nodiscard]] bool is_one() const;

    //! Every coefficient is +1, i.e. the element is literally a P-form.
    [[nodiscard]] bool has_unit_coefficients() const;

    bool operator==(AlgebraElement const&) const = default;

    AlgebraElement& operator+=(AlgebraElement const& other);
    AlgebraElement& operator-=(AlgebraElement const& other);

   private:
    friend AlgebraElement
    normalize(std::size_t,
              std::span<std::pair<Monomial, coefficient_type> const>,
              std::function<std::size_t(std::size_t)> const&);

    std::size_t _n;
    term_map    _terms;
  };

  //! Chooses which of the pending rewritable monomials (given their count)
  //! is rewritten next.  Only used to exercise confluence.
  using RewriteOrder = std::function<std::size_t(std::size_t)>;

  //! Rewrites a raw linear combination into normal form.
  [[nodiscard]] AlgebraElement
  normalize(std::size_t                                             n,
            std::span<std::pair<Monomial, coefficient_type> const> terms,
            RewriteOrder const& order = {});

  [[nodiscard]] AlgebraElement normalize(std::size_t         n,
                                         PForm const&        p,
                                         RewriteOrder const& order = {});

  [[nodiscard]] AlgebraElement operator+(AlgebraElement a,
                                         AlgebraElement const& b);
  [[nodiscard]] AlgebraElement operator-(AlgebraElement a,
                                         AlgebraElement const& b);
  [[nodiscard]] AlgebraElement operator*(AlgebraElement const& a,
                                         AlgebraElement const& b);

  //! The involution: star(c y_I x_J) = c y_J x_I.
  [[nodiscard]] AlgebraElement star(AlgebraElement const& a);

  //! "c*term" summands in canonical order, e.g. "1 - y[1]x[1]"; "0" if zero.
  [[nodiscard]] std::string to_string(AlgebraElement const& a);

}  // namespace htg

#endif  // HTG_LEAVITT_HPP_
