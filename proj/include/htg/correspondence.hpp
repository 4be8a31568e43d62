#ifndef HTG_CORRESPONDENCE_HPP_
#define HTG_CORRESPONDENCE_HPP_

// The isomorphism between G_{n,r} and the group P_{n,r} of unitary r x r
// matrices over L_n whose entries are sums of monomials y_I x_J.
//
// A pair x_i I -> x_j J of a symbol contributes the monomial y_I x_J to the
// entry in row i and column j.

#include <cstddef>

#include "htg/matrix.hpp"
#include "htg/thompson.hpp"

namespace htg {

  //! The P-form matrix of the reduced symbol of g (unitary by construction).
  [[nodiscard]] UnitaryPMatrix symbol_to_matrix(Symbol const& g);

  //! Same matrix without the unitarity check.
  [[nodiscard]] LMatrix symbol_to_lmatrix(Symbol const& g);

  enum class RecognitionMode {
    //! Read the (I, J) pairs straight off P-form entries.
    direct,
    //! Recover the symbol from normal forms by acting on columns y_J e_j.
    evaluate
  };

  inline constexpr std::size_t default_evaluation_cap = 8;

  //! The reduced symbol whose matrix is x.  Throws NotUnitary when x is not
  //! unitary and NotInGroupImage when no symbol can be recovered (in evaluate
  //! mode, within cap extra levels beyond the longest x-part present).
  [[nodiscard]] Symbol matrix_to_symbol(LMatrix const&  x,
                                        RecognitionMode mode,
                                        std::size_t cap = default_evaluation_cap);

}  // namespace htg

#endif  // HTG_CORRESPONDENCE_HPP_
