#ifndef HTG_ERROR_HPP_
#define HTG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace htg {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A precondition on an argument failed (index range, sizes, arity).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! A list of rooted words is not a complete prefix code.
  class InvalidExpansion : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  //! No element of a code is a prefix of the word being factored.
  class NoPrefix : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
  };

  class NotUnitary : public Error {
   public:
    using Error::Error;
  };

  //! A matrix could not be recognised as the image of a symbol.
  class NotInGroupImage : public Error {
   public:
    using Error::Error;
  };

  //! The gcd criterion fails, so no isomorphism exists.
  class NotIsomorphic : public Error {
   public:
    using Error::Error;
  };

  class SearchExhausted : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

}  // namespace htg

#endif  // HTG_ERROR_HPP_
