#ifndef HTG_WORDS_HPP_
#define HTG_WORDS_HPP_

// Words over the alphabet {1, ..., n}, rooted words x_i w, and expansions
// (complete prefix codes below the roots x_1, ..., x_r).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace htg {

  using letter_type = std::uint8_t;

  //! A finite word over {1, ..., n}; the empty word is allowed.
  using word_type = std::vector<letter_type>;

  //! Largest supported alphabet size.
  inline constexpr std::size_t max_arity = 255;

  //! Throws InvalidArgument unless n >= 2, r >= 1 and n <= max_arity.
  void validate_parameters(std::size_t n, std::size_t r);

  //! True if u is an initial segment of v.
  [[nodiscard]] bool is_prefix(word_type const& u, word_type const& v) noexcept;

  [[nodiscard]] word_type concat(word_type const& u, word_type const& v);

  //! Letters of w as digits when n <= 9, comma separated otherwise.
  [[nodiscard]] std::string letters_to_string(word_type const& w,
                                              std::size_t n);

  //! Inverse of letters_to_string; throws InvalidArgument on bad input.
  [[nodiscard]] word_type parse_letters(std::string_view text, std::size_t n);

  //! An element x_root * tail of X_r W_n.  Roots are 1-based.
  struct RootedWord {
    std::size_t root = 1;
    word_type   tail;

    // root first, then lexicographic tail: the canonical order
    auto operator<=>(RootedWord const&) const = default;
    bool operator==(RootedWord const&) const  = default;
  };

  //! u <= v in the prefix order: same root and u.tail is a prefix of v.tail.
  [[nodiscard]] bool is_prefix(RootedWord const& u,
                               RootedWord const& v) noexcept;

  [[nodiscard]] RootedWord operator*(RootedWord const& u, word_type const& w);

  [[nodiscard]] std::string to_string(RootedWord const& u, std::size_t n);

  //! Parses "<root>.<letters>", validating root <= r and letters <= n.
  [[nodiscard]] RootedWord parse_rooted_word(std::string_view text,
                                             std::size_t      n,
                                             std::size_t      r);

  //! True iff the words are pairwise prefix-incomparable and, for every root
  //! i in [1, r], the Kraft sum of the words below x_i is exactly 1.
  [[nodiscard]] bool is_expansion(std::size_t                  n,
                                  std::size_t                  r,
                                  std::span<RootedWord const> words);

  //! A complete prefix code of X_r W_n, kept in a positional order.
  class Expansion {
   public:
    //! Validates; throws InvalidExpansion if the words are not an expansion.
    Expansion(std::size_t n, std::size_t r, std::vector<RootedWord> elements);

    //! The basis X_r = {x_1, ..., x_r}.
    [[nodiscard]] static Expansion roots(std::size_t n, std::size_t r);

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }
    [[nodiscard]] std::size_t r() const noexcept {
      return _r;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] RootedWord const& operator[](std::size_t i) const {
      return _elements[i];
    }
    [[nodiscard]] std::vector<RootedWord> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] auto begin() const noexcept {
      return _elements.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _elements.end();
    }

    //! The same code in canonical order (root-major, lexicographic tail).
    [[nodiscard]] Expansion canonical() const;

    bool operator==(Expansion const&) const = default;

   private:
    struct unchecked_tag {};
    Expansion(unchecked_tag,
              std::size_t             n,
              std::size_t             r,
              std::vector<RootedWord> elements)
        : _n(n), _r(r), _elements(std::move(elements)) {}

    friend Expansion simple_expand(Expansion const&, std::size_t);
    friend Expansion common_expansion(Expansion const&, Expansion const&);

    std::size_t             _n;
    std::size_t             _r;
    std::vector<RootedWord> _elements;
  };

  //! Replaces the element u at (0-based) position k by u*1, ..., u*n in place.
  [[nodiscard]] Expansion simple_expand(Expansion const& b, std::size_t k);

  //! The least common expansion of b and c, in canonical order.
  [[nodiscard]] Expansion common_expansion(Expansion const& b,
                                           Expansion const& c);

  //! The unique (k, alpha) with b[k] * alpha == v (k is 0-based).
  //! Throws NoPrefix when no element of b is a prefix of v.
  [[nodiscard]] std::pair<std::size_t, word_type>
  factor(RootedWord const& v, Expansion const& b);

}  // namespace htg

#endif  // HTG_WORDS_HPP_
