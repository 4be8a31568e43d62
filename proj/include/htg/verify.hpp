#ifndef HTG_VERIFY_HPP_
#define HTG_VERIFY_HPP_

// Seeded property suites.  Each check runs a fixed number of random cases and
// reports how many failed, with a few sample failures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace htg {

  struct VerifyOptions {
    std::uint64_t seed       = 7;
    //! Simple expansions per side of each random symbol.
    std::size_t   depth      = 6;
    std::size_t   budget     = 1'000'000;
    std::size_t   span_bound = 8;
    //! Restrict the generator check to L_n -> M_d(L_n).
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
  };

  struct CheckResult {
    std::string              name;
    std::size_t              cases    = 0;
    std::size_t              failures = 0;
    double                   seconds  = 0;
    std::vector<std::string> details;

    [[nodiscard]] bool passed() const noexcept {
      return failures == 0;
    }
  };

  //! Expansion growth, common refinement and factoring.
  [[nodiscard]] CheckResult check_words(VerifyOptions const& options);

  //! Normal-form confluence, mono_mul zero pattern, defining relations.
  [[nodiscard]] CheckResult check_algebra(VerifyOptions const& options);

  //! Group axioms and confluence of reduce.
  [[nodiscard]] CheckResult check_group(VerifyOptions const& options);

  //! phi multiplicative, unitary and inverted by psi.
  [[nodiscard]] CheckResult check_correspondence(VerifyOptions const& options);

  //! shift_up / shift_down round trips and homomorphism laws.
  [[nodiscard]] CheckResult check_shifts(VerifyOptions const& options);

  //! build_generators for (2, 4), (3, 5), (2, 6), or for (options.d,
  //! options.n) when both are set; the search transcript goes to details.
  [[nodiscard]] CheckResult check_generators(VerifyOptions const& options);

  //! group_iso for (4, 1, 2) and (3, 1, 3).
  [[nodiscard]] CheckResult check_main_theorem(VerifyOptions const& options);

  //! classify against the gcd criterion on n, m <= 6, r, s <= 8.
  [[nodiscard]] CheckResult check_classification(VerifyOptions const& options);

  //! The suites are words, leavitt, thompson, correspondence, iso and all.
  //! Throws InvalidArgument for any other name.
  [[nodiscard]] std::vector<CheckResult> run_suite(std::string_view     suite,
                                                   VerifyOptions const& options);

  [[nodiscard]] std::vector<std::string> const& suite_names();

}  // namespace htg

#endif  // HTG_VERIFY_HPP_
