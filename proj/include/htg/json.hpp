#ifndef HTG_JSON_HPP_
#define HTG_JSON_HPP_

// JSON dumps used by the command line front end.

#include <json.hpp>

#include "htg/iso.hpp"
#include "htg/matrix.hpp"
#include "htg/thompson.hpp"
#include "htg/verify.hpp"

namespace htg {

  //! {"n", "rows", "cols", "entries": [[text, ...], ...]}
  [[nodiscard]] nlohmann::json to_json(LMatrix const& a);

  //! {"n", "r", "pairs": [{"domain", "range"}, ...]}
  [[nodiscard]] nlohmann::json to_json(Symbol const& s);

  //! {"n", "d", "base_d", "q", "rho", "generation", "witness_length",
  //!  "assignment": {"a[i,j]": "x[...]"}, "X": [matrix, ...]}
  [[nodiscard]] nlohmann::json to_json(GeneratorSet const& g);

  //! {"name", "cases", "failures", "passed", "seconds", "details"}
  [[nodiscard]] nlohmann::json to_json(CheckResult const& c);

}  // namespace htg

#endif  // HTG_JSON_HPP_
