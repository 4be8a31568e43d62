#include "htg/words.hpp"

#include <algorithm>
#include <charconv>

#include <boost/multiprecision/cpp_int.hpp>

#include "htg/error.hpp"

namespace htg {

  void validate_parameters(std::size_t n, std::size_t r) {
    if (n < 2 || n > max_arity) {
      throw InvalidArgument("arity n must be in [2, "
                            + std::to_string(max_arity) + "], found "
                            + std::to_string(n));
    }
    if (r < 1) {
      throw InvalidArgument("root count r must be at least 1");
    }
  }

  bool is_prefix(word_type const& u, word_type const& v) noexcept {
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
  }

  word_type concat(word_type const& u, word_type const& v) {
    word_type result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  std::string letters_to_string(word_type const& w, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (n > 9 && i != 0) {
        out += ',';
      }
      out += std::to_string(static_cast<unsigned>(w[i]));
    }
    return out;
  }

  namespace {
    letter_type parse_letter(std::string_view text, std::size_t n) {
      unsigned value = 0;
      auto [ptr, ec]
          = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()
          || text.empty()) {
        throw InvalidArgument("invalid letter \"" + std::string(text) + "\"");
      }
      if (value < 1 || value > n) {
        throw InvalidArgument("letter " + std::to_string(value)
                              + " out of range [1, " + std::to_string(n)
                              + "]");
      }
      return static_cast<letter_type>(value);
    }
  }  // namespace

  word_type parse_letters(std::string_view text, std::size_t n) {
    word_type w;
    if (text.empty()) {
      return w;
    }
    if (n <= 9) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        w.push_back(parse_letter(text.substr(i, 1), n));
      }
      return w;
    }
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      w.push_back(parse_letter(text.substr(start, comma - start), n));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return w;
  }

  bool is_prefix(RootedWord const& u, RootedWord const& v) noexcept {
    return u.root == v.root && is_prefix(u.tail, v.tail);
  }

  RootedWord operator*(RootedWord const& u, word_type const& w) {
    return RootedWord{u.root, concat(u.tail, w)};
  }

  std::string to_string(RootedWord const& u, std::size_t n) {
    return std::to_string(u.root) + "." + letters_to_string(u.tail, n);
  }

  RootedWord parse_rooted_word(std::string_view text,
                               std::size_t      n,
                               std::size_t      r) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos || dot == 0) {
      throw InvalidArgument("rooted word \"" + std::string(text)
                            + "\" must have the form <root>.<letters>");
    }
    std::size_t root = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + dot, root);
    if (ec != std::errc() || ptr != text.data() + dot) {
      throw InvalidArgument("invalid root in \"" + std::string(text) + "\"");
    }
    if (root < 1 || root > r) {
      throw InvalidArgument("root " + std::to_string(root)
                            + " out of range [1, " + std::to_string(r) + "]");
    }
    return RootedWord{root, parse_letters(text.substr(dot + 1), n)};
  }

  bool is_expansion(std::size_t                 n,
                    std::size_t                 r,
                    std::span<RootedWord const> words) {
    using boost::multiprecision::cpp_int;
    if (n < 2 || r < 1) {
      return false;
    }
    std::vector<RootedWord> sorted(words.begin(), words.end());
    for (auto const& w : sorted) {
      if (w.root < 1 || w.root > r) {
        return false;
      }
      for (auto a : w.tail) {
        if (a < 1 || a > n) {
          return false;
        }
      }
    }
    std::sort(sorted.begin(), sorted.end());
    // In lexicographic order every word lying between u and an extension of
    // u also extends u, so checking neighbours is enough.
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (is_prefix(sorted[i - 1], sorted[i])) {
        return false;
      }
    }
    std::size_t depth = 0;
    for (auto const& w : sorted) {
      depth = std::max(depth, w.tail.size());
    }
    cpp_int const full = boost::multiprecision::pow(cpp_int(n),
                                                    static_cast<unsigned>(depth));
    std::vector<cpp_int> kraft(r + 1, 0);
    for (auto const& w : sorted) {
      kraft[w.root] += boost::multiprecision::pow(
          cpp_int(n), static_cast<unsigned>(depth - w.tail.size()));
    }
    for (std::size_t i = 1; i <= r; ++i) {
      if (kraft[i] != full) {
        return false;
      }
    }
    return true;
  }

  Expansion::Expansion(std::size_t             n,
                       std::size_t             r,
                       std::vector<RootedWord> elements)
      : _n(n), _r(r), _elements(std::move(elements)) {
    validate_parameters(n, r);
    if (!is_expansion(n, r, _elements)) {
      throw InvalidExpansion("the given words do not form an expansion of X_"
                             + std::to_string(r));
    }
  }

  Expansion Expansion::roots(std::size_t n, std::size_t r) {
    validate_parameters(n, r);
    std::vector<RootedWord> elements;
    for (std::size_t i = 1; i <= r; ++i) {
      elements.push_back(RootedWord{i, {}});
    }
    return Expansion(unchecked_tag{}, n, r, std::move(elements));
  }

  Expansion Expansion::canonical() const {
    auto copy = _elements;
    std::sort(copy.begin(), copy.end());
    return Expansion(unchecked_tag{}, _n, _r, std::move(copy));
  }

  Expansion simple_expand(Expansion const& b, std::size_t k) {
    if (k >= b.size()) {
      throw InvalidArgument("expansion index " + std::to_string(k)
                            + " out of range [0, " + std::to_string(b.size())
                            + ")");
    }
    std::vector<RootedWord> elements;
    elements.reserve(b.size() + b.n() - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != k) {
        elements.push_back(b[i]);
        continue;
      }
      for (std::size_t a = 1; a <= b.n(); ++a) {
        elements.push_back(b[i] * word_type{static_cast<letter_type>(a)});
      }
    }
    return Expansion(Expansion::unchecked_tag{}, b.n(), b.r(),
                     std::move(elements));
  }

  Expansion common_expansion(Expansion const& b, Expansion const& c) {
    if (b.n() != c.n() || b.r() != c.r()) {
      throw InvalidArgument("common_expansion: parameter mismatch");
    }
    std::vector<RootedWord> result;
    auto below = [](RootedWord const& u, Expansion const& other) {
      return std::any_of(other.begin(), other.end(), [&u](auto const& v) {
        return is_prefix(v, u);
      });
    };
    for (auto const& u : b) {
      if (below(u, c)) {
        result.push_back(u);
      }
    }
    for (auto const& v : c) {
      if (below(v, b)) {
        result.push_back(v);
      }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return Expansion(Expansion::unchecked_tag{}, b.n(), b.r(),
                     std::move(result));
  }

  std::pair<std::size_t, word_type> factor(RootedWord const& v,
                                           Expansion const&  b) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (is_prefix(b[k], v)) {
        return {k, word_type(v.tail.begin() + b[k].tail.size(), v.tail.end())};
      }
    }
    throw NoPrefix("no element of the expansion is a prefix of "
                   + to_string(v, b.n()));
  }

}  // namespace htg
