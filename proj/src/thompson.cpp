#include "htg/thompson.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "htg/error.hpp"

namespace htg {

  Symbol::Symbol(Expansion domain, Expansion range)
      : _domain(std::move(domain)), _range(std::move(range)) {
    if (_domain.n() != _range.n() || _domain.r() != _range.r()) {
      throw InvalidArgument("domain and range have different (n, r)");
    }
    if (_domain.size() != _range.size()) {
      throw InvalidArgument("domain has " + std::to_string(_domain.size())
                            + " elements but range has "
                            + std::to_string(_range.size()));
    }
  }

  Symbol Symbol::identity(std::size_t n, std::size_t r) {
    return Symbol(Expansion::roots(n, r), Expansion::roots(n, r));
  }

  Symbol make_symbol(Expansion domain, Expansion range) {
    return Symbol(std::move(domain), std::move(range));
  }

  namespace {
    using pair_map = std::map<RootedWord, RootedWord>;

    // If the children of parent are all in the domain and map in letter order
    // onto the children of a single word, returns that word.
    std::optional<RootedWord> collapsible(pair_map const&   pairs,
                                          RootedWord const& parent,
                                          std::size_t       n) {
      auto it = pairs.find(parent * word_type{1});
      if (it == pairs.end() || it->second.tail.empty()
          || it->second.tail.back() != 1) {
        return std::nullopt;
      }
      RootedWord target = it->second;
      target.tail.pop_back();
      for (std::size_t k = 2; k <= n; ++k) {
        auto const letter = static_cast<letter_type>(k);
        auto       jt     = pairs.find(parent * word_type{letter});
        if (jt == pairs.end() || jt->second != target * word_type{letter}) {
          return std::nullopt;
        }
      }
      return target;
    }

    std::vector<RootedWord> candidates(pair_map const& pairs, std::size_t n) {
      std::vector<RootedWord> result;
      for (auto const& [u, v] : pairs) {
        if (u.tail.empty() || u.tail.back() != 1) {
          continue;
        }
        RootedWord parent = u;
        parent.tail.pop_back();
        if (collapsible(pairs, parent, n)) {
          result.push_back(std::move(parent));
        }
      }
      return result;
    }

    void collapse(pair_map& pairs, RootedWord const& parent, std::size_t n) {
      auto target = collapsible(pairs, parent, n);
      for (std::size_t k = 1; k <= n; ++k) {
        pairs.erase(parent * word_type{static_cast<letter_type>(k)});
      }
      pairs.emplace(parent, std::move(*target));
    }

    pair_map to_map(Symbol const& s) {
      pair_map pairs;
      for (std::size_t t = 0; t < s.size(); ++t) {
        pairs.emplace(s.domain()[t], s.range()[t]);
      }
      return pairs;
    }

    Symbol from_map(pair_map const& pairs, std::size_t n, std::size_t r) {
      std::vector<RootedWord> domain, range;
      domain.reserve(pairs.size());
      range.reserve(pairs.size());
      for (auto const& [u, v] : pairs) {
        domain.push_back(u);
        range.push_back(v);
      }
      return Symbol(Expansion(n, r, std::move(domain)),
                    Expansion(n, r, std::move(range)));
    }

    std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
      return rng() % bound;
    }
  }  // namespace

  Symbol reduce(Symbol const& s) {
    auto pairs = to_map(s);
    while (true) {
      auto found = candidates(pairs, s.n());
      if (found.empty()) {
        break;
      }
      // distinct parents have disjoint child sets
      for (auto const& parent : found) {
        collapse(pairs, parent, s.n());
      }
    }
    return from_map(pairs, s.n(), s.r());
  }

  Symbol reduce_randomized(Symbol const& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto            pairs = to_map(s);
    while (true) {
      auto found = candidates(pairs, s.n());
      if (found.empty()) {
        break;
      }
      collapse(pairs, found[bounded(rng, found.size())], s.n());
    }
    return from_map(pairs, s.n(), s.r());
  }

  bool is_canonical(Symbol const& s) {
    if (!std::is_sorted(s.domain().begin(), s.domain().end())) {
      return false;
    }
    return candidates(to_map(s), s.n()).empty();
  }

  Symbol compose(Symbol const& a, Symbol const& b) {
    if (a.n() != b.n() || a.r() != b.r()) {
      throw InvalidArgument("cannot compose elements of different groups");
    }
    auto const              common = common_expansion(a.range(), b.domain());
    std::vector<RootedWord> domain, range;
    domain.reserve(common.size());
    range.reserve(common.size());
    for (auto const& e : common) {
      auto [i, alpha] = factor(e, a.range());
      auto [j, beta]  = factor(e, b.domain());
      domain.push_back(a.domain()[i] * alpha);
      range.push_back(b.range()[j] * beta);
    }
    return reduce(Symbol(Expansion(a.n(), a.r(), std::move(domain)),
                         Expansion(a.n(), a.r(), std::move(range))));
  }

  Symbol invert(Symbol const& a) {
    return reduce(Symbol(a.range(), a.domain()));
  }

  bool equals(Symbol const& a, Symbol const& b) {
    if (a.n() != b.n() || a.r() != b.r()) {
      return false;
    }
    return reduce(a) == reduce(b);
  }

  RootedWord apply(Symbol const& s, RootedWord const& w) {
    auto [k, alpha] = factor(w, s.domain());
    return s.range()[k] * alpha;
  }

  Symbol random_symbol(std::size_t   n,
                       std::size_t   r,
                       std::size_t   depth,
                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto            grow = [&]() {
      auto b = Expansion::roots(n, r);
      for (std::size_t step = 0; step < depth; ++step) {
        b = simple_expand(b, bounded(rng, b.size()));
      }
      return b;
    };
    auto domain = grow();
    auto range  = grow();
    auto words  = range.elements();
    for (std::size_t i = words.size(); i > 1; --i) {
      std::swap(words[i - 1], words[bounded(rng, i)]);
    }
    return reduce(Symbol(std::move(domain), Expansion(n, r, std::move(words))));
  }

  std::optional<std::size_t> element_order(Symbol const& g,
                                           std::size_t   limit) {
    auto const one   = Symbol::identity(g.n(), g.r());
    auto       power = reduce(g);
    for (std::size_t k = 1; k <= limit; ++k) {
      if (power == one) {
        return k;
      }
      power = compose(power, g);
    }
    return std::nullopt;
  }

  std::string to_text(Symbol const& s) {
    std::string out = "g n=" + std::to_string(s.n())
                      + " r=" + std::to_string(s.r()) + "\n";
    for (std::size_t t = 0; t < s.size(); ++t) {
      out += to_string(s.domain()[t], s.n()) + " -> "
             + to_string(s.range()[t], s.n()) + "\n";
    }
    return out;
  }

  namespace {
    std::size_t parse_header_value(std::string_view token,
                                   std::string_view key,
                                   std::size_t      line) {
      if (token.substr(0, key.size()) != key) {
        throw ParseError(line, "expected \"" + std::string(key) + "<int>\"");
      }
      auto        digits = token.substr(key.size());
      std::size_t value  = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || digits.empty()) {
        throw ParseError(line,
                         "invalid integer in \"" + std::string(token) + "\"");
      }
      return value;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Symbol parse_symbol(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t                                            number = 0;
    while (!text.empty()) {
      ++number;
      auto eol  = text.find('\n');
      auto line = trim(text.substr(0, eol));
      if (!line.empty()) {
        lines.emplace_back(number, line);
      }
      if (eol == std::string_view::npos) {
        break;
      }
      text.remove_prefix(eol + 1);
    }
    if (lines.empty()) {
      throw ParseError(1, "empty input, expected header \"g n=<int> r=<int>\"");
    }
    auto [header_line, header] = lines.front();
    std::istringstream tokens{std::string(header)};
    std::string        g, n_token, r_token, extra;
    tokens >> g >> n_token >> r_token;
    if (g != "g" || n_token.empty() || r_token.empty() || (tokens >> extra)) {
      throw ParseError(header_line, "expected header \"g n=<int> r=<int>\"");
    }
    auto const n = parse_header_value(n_token, "n=", header_line);
    auto const r = parse_header_value(r_token, "r=", header_line);
    try {
      validate_parameters(n, r);
    } catch (InvalidArgument const& e) {
      throw ParseError(header_line, e.what());
    }
    std::vector<RootedWord> domain, range;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto [line_no, line] = lines[i];
      auto arrow           = line.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError(line_no, "expected \"<rooted-word> -> <rooted-word>\"");
      }
      try {
        domain.push_back(parse_rooted_word(trim(line.substr(0, arrow)), n, r));
        range.push_back(parse_rooted_word(trim(line.substr(arrow + 2)), n, r));
      } catch (InvalidArgument const& e) {
        throw ParseError(line_no, e.what());
      }
    }
    auto const last = lines.back().first;
    try {
      return Symbol(Expansion(n, r, std::move(domain)),
                    Expansion(n, r, std::move(range)));
    } catch (InvalidExpansion const& e) {
      throw ParseError(last, std::string("invalid symbol: ") + e.what());
    }
  }

}  // namespace htg
