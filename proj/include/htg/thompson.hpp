#ifndef HTG_THOMPSON_HPP_
#define HTG_THOMPSON_HPP_

// Elements of the Higman-Thompson group G_{n,r} as symbols: two expansions of
// X_r of the same size, paired position by position.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "htg/words.hpp"

namespace htg {

  class Symbol {
   public:
    //! Pairs domain[t] with range[t].  Throws InvalidArgument on a size or
    //! parameter mismatch.
    Symbol(Expansion domain, Expansion range);

    [[nodiscard]] static Symbol identity(std::size_t n, std::size_t r);

    [[nodiscard]] std::size_t n() const noexcept {
      return _domain.n();
    }
    [[nodiscard]] std::size_t r() const noexcept {
      return _domain.r();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _domain.size();
    }
    [[nodiscard]] Expansion const& domain() const noexcept {
      return _domain;
    }
    [[nodiscard]] Expansion const& range() const noexcept {
      return _range;
    }

    //! Structural equality of the two rows (not the group equality).
    bool operator==(Symbol const&) const = default;

   private:
    Expansion _domain;
    Expansion _range;
  };

  //! Same as the Symbol constructor; the result is not reduced.
  [[nodiscard]] Symbol make_symbol(Expansion domain, Expansion range);

  //! Collapses every n-tuple u*1, ..., u*n -> v*1, ..., v*n into u -> v until
  //! none remain, and lists the pairs in canonical domain order.
  [[nodiscard]] Symbol reduce(Symbol const& s);

  //! Same result as reduce, collapsing one randomly chosen tuple at a time.
  [[nodiscard]] Symbol reduce_randomized(Symbol const& s, std::uint64_t seed);

  //! True if s has no collapsible tuple and its domain is in canonical order.
  [[nodiscard]] bool is_canonical(Symbol const& s);

  //! Applies a first, then b.
  [[nodiscard]] Symbol compose(Symbol const& a, Symbol const& b);

  [[nodiscard]] Symbol invert(Symbol const& a);

  //! Equality in G_{n,r}.
  [[nodiscard]] bool equals(Symbol const& a, Symbol const& b);

  //! The image of w under s.  Throws NoPrefix if w lies above the domain.
  [[nodiscard]] RootedWord apply(Symbol const& s, RootedWord const& w);

  //! Deterministic in seed: depth random simple expansions for the domain,
  //! depth for the range, a random pairing, then reduce.
  [[nodiscard]] Symbol random_symbol(std::size_t   n,
                                     std::size_t   r,
                                     std::size_t   depth,
                                     std::uint64_t seed);

  //! The least k in [1, limit] with g^k = 1, if any.
  [[nodiscard]] std::optional<std::size_t> element_order(Symbol const& g,
                                                         std::size_t   limit);

  //! "g n=<n> r=<r>" followed by one "DOMAIN -> RANGE" line per pair.
  [[nodiscard]] std::string to_text(Symbol const& s);

  //! Parses the text format; throws ParseError with a 1-based line number.
  [[nodiscard]] Symbol parse_symbol(std::string_view text);

}  // namespace htg

#endif  // HTG_THOMPSON_HPP_
