#ifndef HTG_MATRIX_HPP_
#define HTG_MATRIX_HPP_

// Dense matrices over L_n.  Each entry is carried either as a P-form (a sum of
// monomials with coefficient one) or as a normal form.  Products of P-form
// matrices stay in P-form; the normal form is only computed for comparisons.

#include <cstddef>
#include <variant>
#include <vector>

#include "htg/leavitt.hpp"

namespace htg {

  using Entry = std::variant<PForm, AlgebraElement>;

  [[nodiscard]] AlgebraElement to_nf(Entry const& e, std::size_t n);
  [[nodiscard]] bool           is_pform(Entry const& e) noexcept;
  [[nodiscard]] std::string    to_string(Entry const& e);

  class LMatrix {
   public:
    //! The rows x cols zero matrix (P-form entries).
    LMatrix(std::size_t n, std::size_t rows, std::size_t cols);

    [[nodiscard]] static LMatrix identity(std::size_t n, std::size_t d);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] bool is_square() const noexcept {
      return _rows == _cols;
    }

    //! 0-based indices.
    [[nodiscard]] Entry const& at(std::size_t i, std::size_t j) const;
    Entry&                     at(std::size_t i, std::size_t j);

    //! The same matrix with every entry in normal form.
    [[nodiscard]] LMatrix nf() const;

   private:
    std::size_t        _n;
    std::size_t        _rows;
    std::size_t        _cols;
    std::vector<Entry> _entries;
  };

  //! P-form path if both factors are P-form matrices, otherwise normal forms.
  [[nodiscard]] LMatrix mat_mul(LMatrix const& a, LMatrix const& b);

  //! Always multiplies through normal forms.
  [[nodiscard]] LMatrix mat_mul_nf(LMatrix const& a, LMatrix const& b);

  [[nodiscard]] LMatrix mat_add(LMatrix const& a, LMatrix const& b);

  //! Transpose with entrywise star.
  [[nodiscard]] LMatrix mat_star(LMatrix const& a);

  //! Entrywise equality of normal forms.
  [[nodiscard]] bool equals(LMatrix const& a, LMatrix const& b);

  [[nodiscard]] bool is_identity(LMatrix const& a);

  //! X X^* = X^* X = I.
  [[nodiscard]] bool is_unitary(LMatrix const& x);

  //! Every entry is carried in P-form, or is a normal form whose coefficients
  //! are all +1.
  [[nodiscard]] bool is_pform_matrix(LMatrix const& x);

  //! A unitary matrix with P-form entries, i.e. an element of P_{n,r}.
  class UnitaryPMatrix {
   public:
    //! Throws NotUnitary or InvalidArgument if the invariants fail.
    explicit UnitaryPMatrix(LMatrix base);

    [[nodiscard]] LMatrix const& matrix() const noexcept {
      return _base;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _base.rows();
    }

   private:
    LMatrix _base;
  };

}  // namespace htg

#endif  // HTG_MATRIX_HPP_
