#ifndef HTG_ISO_HPP_
#define HTG_ISO_HPP_

// Explicit isomorphisms M_r(L_n) -> M_s(L_n) for gcd(n - 1, r) = gcd(n - 1, s)
// and the induced isomorphisms G_{n,r} -> G_{n,s}.
//
// The pipeline is: replace every entry by its image under an isomorphism
// L_n -> M_l(L_n) (given by generator matrices X_1, ..., X_n), which lands in
// M_{rl}(L_n), then move from size rl to s in steps of n - 1 with the shift
// isomorphism A -> U A U^*, U = diag(I_{r-1}, (x_1, ..., x_n)^t).

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "htg/correspondence.hpp"
#include "htg/matrix.hpp"
#include "htg/thompson.hpp"

namespace htg {

  //! The s x r matrix diag(I_{r-1}, (x_1, ..., x_n)^t), s = r + n - 1.
  [[nodiscard]] LMatrix shift_matrix(std::size_t n, std::size_t r);

  //! A -> U A U^*, from r x r to (r + n - 1) x (r + n - 1).
  [[nodiscard]] LMatrix shift_up(LMatrix const& a);

  //! B -> U^* B U, from s x s to (s - n + 1) x (s - n + 1); requires
  //! s > n - 1.  Two-sided inverse of shift_up.
  [[nodiscard]] LMatrix shift_down(LMatrix const& b);

  struct IsoPlan {
    std::size_t    n;
    std::size_t    r;
    std::size_t    s;
    std::size_t    l;
    //! (s - l r) / (n - 1): positive means shift_up steps.
    std::ptrdiff_t shift_steps;
  };

  //! The smallest l >= 1 with gcd(l, n - 1) = 1 and l r = s (mod n - 1).
  //! Throws NotIsomorphic when gcd(n - 1, r) != gcd(n - 1, s).
  [[nodiscard]] IsoPlan find_l(std::size_t n, std::size_t r, std::size_t s);

  //! G_{n,r} and G_{m,s} are isomorphic iff m = n and
  //! gcd(n - 1, r) = gcd(n - 1, s).
  [[nodiscard]] bool classify(std::size_t n,
                              std::size_t r,
                              std::size_t m,
                              std::size_t s);

  enum class GenerationStatus {
    verified,
    //! Relations hold, but the bounded span search did not find every
    //! witness; surjectivity is not certified.
    unverified
  };

  //! A free slot of the generator templates: entry (row, d) of X_matrix,
  //! both 1-based.
  struct Slot {
    std::size_t matrix;
    std::size_t row;
    bool        operator==(Slot const&) const = default;
  };

  //! Images X_i of x_i under an isomorphism L_n -> M_d(L_n).
  struct GeneratorSet {
    std::size_t n;
    std::size_t d;
    //! Size the templates were instantiated at; d is reached from it by
    //! shift_up steps when base_d < d.
    std::size_t base_d;
    std::size_t q;
    std::size_t rho;
    //! Slot -> element x_K of the list, stored as the multiindex K.
    std::vector<std::pair<Slot, word_type>> assignment;
    std::vector<LMatrix>                    X;
    std::vector<LMatrix>                    Y;
    GenerationStatus                        generation;
    //! Word length at which the last witness was found (0 when trivial).
    std::size_t                             witness_length;
    std::vector<std::string>                transcript;
  };

  struct GeneratorOptions {
    //! Maximum number of complete assignments examined.
    std::size_t budget     = 1'000'000;
    std::size_t span_bound = 8;
    //! Skip assignments that fail the transducer merging test before
    //! running the span search.
    bool        prefilter  = true;
  };

  //! n = q d + rho with 2 <= rho <= d; requires d < n and gcd(d, n - 1) = 1.
  [[nodiscard]] std::pair<std::size_t, std::size_t>
  template_parameters(std::size_t d, std::size_t n);

  //! The slots a_{q+2, rho-1..d} and a_{i, 1..d} for i >= q + 3, in order.
  [[nodiscard]] std::vector<Slot> template_slots(std::size_t d, std::size_t n);

  //! x_1^{d-1}, then x_j x_1^t for t = d - 2, ..., 0 and j = 2, ..., n, as
  //! multiindices (x_j x_1^t is the multiindex 1^t j).
  [[nodiscard]] std::vector<word_type> the_list(std::size_t d, std::size_t n);

  //! Instantiates the templates with list[perm[k]] in slot k.
  [[nodiscard]] std::vector<LMatrix>
  instantiate_templates(std::size_t                     d,
                        std::size_t                     n,
                        std::vector<std::size_t> const& perm);

  //! X_i Y_j = delta_ij I and sum_j Y_j X_j = I, checked in normal form.
  [[nodiscard]] bool satisfies_relations(std::vector<LMatrix> const& x);

  //! Necessary condition for the generators to generate M_d(L_n).
  [[nodiscard]] bool passes_merge_test(std::vector<LMatrix> const& x);

  struct SpanResult {
    bool        complete;
    std::size_t length;
    std::size_t witnesses_found;
    std::size_t witnesses_total;
  };

  //! Searches for every matrix unit e_ij and every x_k e_11 in the span of
  //! the images of the monomials y_I x_J with |I| + |J| <= bound.  Every
  //! witness found is verified exactly.
  [[nodiscard]] SpanResult span_check(std::vector<LMatrix> const& x,
                                      std::size_t                 bound);

  //! Throws InvalidArgument when gcd(d, n - 1) != 1, SearchExhausted when
  //! no relation-satisfying assignment is found within the budget.
  [[nodiscard]] GeneratorSet build_generators(std::size_t             d,
                                              std::size_t             n,
                                              GeneratorOptions const& options
                                              = {});

  //! Image of a under the unital homomorphism x_i -> X_i, y_i -> Y_i.
  [[nodiscard]] LMatrix embed_entry(Entry const& a, GeneratorSet const& g);
  [[nodiscard]] LMatrix embed_monomial(Monomial const& m, GeneratorSet const& g);

  //! Replaces every entry of an r x r matrix by its l x l image.
  [[nodiscard]] LMatrix embed_blocks(LMatrix const& a, GeneratorSet const& g);

  //! M_r(L_n) -> M_s(L_n) following plan; g must have d = plan.l.
  [[nodiscard]] LMatrix matrix_iso(IsoPlan const&      plan,
                                   GeneratorSet const& g,
                                   LMatrix const&      a);

  //! The isomorphism G_{n,r} -> G_{n,s}.
  class GroupIsomorphism {
   public:
    GroupIsomorphism(std::size_t             n,
                     std::size_t             r,
                     std::size_t             s,
                     GeneratorOptions const& options = {});

    [[nodiscard]] Symbol operator()(Symbol const& g) const;

    //! The matrix image of g in P_{n,s}, before recognition.
    [[nodiscard]] LMatrix matrix_image(Symbol const& g) const;

    [[nodiscard]] IsoPlan const& plan() const noexcept {
      return _plan;
    }
    [[nodiscard]] GeneratorSet const& generators() const noexcept {
      return _generators;
    }

   private:
    IsoPlan      _plan;
    GeneratorSet _generators;
  };

  //! One-shot form of GroupIsomorphism(n, r, s)(g).
  [[nodiscard]] Symbol group_iso(std::size_t   n,
                                 std::size_t   r,
                                 std::size_t   s,
                                 Symbol const& g);

}  // namespace htg

#endif  // HTG_ISO_HPP_
