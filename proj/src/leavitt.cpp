#include "htg/leavitt.hpp"

#include <iterator>

#include "htg/error.hpp"

namespace htg {

  std::strong_ordering Monomial::operator<=>(Monomial const& other) const {
    if (auto c = length() <=> other.length(); c != 0) {
      return c;
    }
    if (auto c = y <=> other.y; c != 0) {
      return c;
    }
    return x <=> other.x;
  }

  std::optional<Monomial> mono_mul(Monomial const& a, Monomial const& b) {
    // The inner product x_{a.x} y_{b.y} cancels letter by letter from the
    // front of both multiindices.
    if (is_prefix(a.x, b.y)) {
      word_type rest(b.y.begin() + a.x.size(), b.y.end());
      return Monomial{concat(a.y, rest), b.x};
    }
    if (is_prefix(b.y, a.x)) {
      word_type rest(a.x.begin() + b.y.size(), a.x.end());
      return Monomial{a.y, concat(b.x, rest)};
    }
    return std::nullopt;
  }

  bool is_forbidden(Monomial const& m, std::size_t n) noexcept {
    return !m.y.empty() && !m.x.empty() && m.y.back() == n && m.x.back() == n;
  }

  namespace {
    std::string bracket(word_type const& w) {
      std::string out = "[";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(static_cast<unsigned>(w[i]));
      }
      return out + "]";
    }
  }  // namespace

  std::string to_string(Monomial const& m) {
    if (m.y.empty() && m.x.empty()) {
      return "1";
    }
    std::string out;
    if (!m.y.empty()) {
      out += "y" + bracket(m.y);
    }
    if (!m.x.empty()) {
      out += "x" + bracket(m.x);
    }
    return out;
  }

  PForm star(PForm const& p) {
    PForm result;
    result.terms.reserve(p.terms.size());
    for (auto const& m : p.terms) {
      result.terms.push_back(star(m));
    }
    return result;
  }

  PForm pform_mul(PForm const& a, PForm const& b) {
    PForm result;
    for (auto const& u : a.terms) {
      for (auto const& v : b.terms) {
        if (auto w = mono_mul(u, v)) {
          result.terms.push_back(std::move(*w));
        }
      }
    }
    return result;
  }

  PForm pform_add(PForm const& a, PForm const& b) {
    PForm result = a;
    result.terms.insert(result.terms.end(), b.terms.begin(), b.terms.end());
    return result;
  }

  std::string to_string(PForm const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
      if (i != 0) {
        out += " + ";
      }
      out += to_string(p.terms[i]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement::AlgebraElement(std::size_t n) : _n(n), _terms() {
    validate_parameters(n, 1);
  }

  AlgebraElement AlgebraElement::one(std::size_t n) {
    return monomial(n, unit_monomial());
  }

  AlgebraElement AlgebraElement::monomial(std::size_t n, Monomial const& m) {
    std::pair<Monomial, coefficient_type> term{m, 1};
    return normalize(n, std::span(&term, 1));
  }

  bool AlgebraElement::is_one() const {
    return _terms.size() == 1 && _terms.begin()->first == unit_monomial()
           && _terms.begin()->second == 1;
  }

  bool AlgebraElement::has_unit_coefficients() const {
    for (auto const& [m, c] : _terms) {
      if (c != 1) {
        return false;
      }
    }
    return true;
  }

  namespace {
    void accumulate(AlgebraElement::term_map& terms,
                    Monomial const&           m,
                    coefficient_type const&   c) {
      auto [it, inserted] = terms.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          terms.erase(it);
        }
      } else if (c == 0) {
        terms.erase(it);
      }
    }
  }  // namespace

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    if (other._n != _n) {
      throw InvalidArgument("cannot add elements of different Leavitt algebras");
    }
    for (auto const& [m, c] : other._terms) {
      accumulate(_terms, m, c);
    }
    return *this;
  }

  AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
    if (other._n != _n) {
      throw InvalidArgument(
          "cannot subtract elements of different Leavitt algebras");
    }
    for (auto const& [m, c] : other._terms) {
      accumulate(_terms, m, -c);
    }
    return *this;
  }

  AlgebraElement
  normalize(std::size_t                                             n,
            std::span<std::pair<Monomial, coefficient_type> const> terms,
            RewriteOrder const&                                     order) {
    AlgebraElement           result(n);
    AlgebraElement::term_map pending;
    auto                     add = [&](Monomial const& m, coefficient_type const& c) {
      accumulate(is_forbidden(m, n) ? pending : result._terms, m, c);
    };
    for (auto const& [m, c] : terms) {
      for (auto a : m.y) {
        if (a < 1 || a > n) {
          throw InvalidArgument("monomial letter out of range");
        }
      }
      for (auto a : m.x) {
        if (a < 1 || a > n) {
          throw InvalidArgument("monomial letter out of range");
        }
      }
      add(m, c);
    }
    // y_{I n} x_{J n} -> y_I x_J - sum_{k < n} y_{I k} x_{J k}.  Each step
    // replaces a monomial by strictly shorter or non-rewritable ones.
    while (!pending.empty()) {
      auto it = pending.begin();
      if (order) {
        auto const i = order(pending.size());
        if (i >= pending.size()) {
          throw InvalidArgument("rewrite order returned an invalid index");
        }
        std::advance(it, i);
      }
      Monomial         m = it->first;
      coefficient_type c = it->second;
      pending.erase(it);
      m.y.pop_back();
      m.x.pop_back();
      for (std::size_t k = 1; k < n; ++k) {
        Monomial child = m;
        child.y.push_back(static_cast<letter_type>(k));
        child.x.push_back(static_cast<letter_type>(k));
        add(child, -c);
      }
      add(m, c);
    }
    return result;
  }

  AlgebraElement normalize(std::size_t         n,
                           PForm const&        p,
                           RewriteOrder const& order) {
    std::vector<std::pair<Monomial, coefficient_type>> terms;
    terms.reserve(p.terms.size());
    for (auto const& m : p.terms) {
      terms.emplace_back(m, 1);
    }
    return normalize(n, terms, order);
  }

  AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
    a += b;
    return a;
  }

  AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
    a -= b;
    return a;
  }

  AlgebraElement operator*(AlgebraElement const& a, AlgebraElement const& b) {
    if (a.n() != b.n()) {
      throw InvalidArgument(
          "cannot multiply elements of different Leavitt algebras");
    }
    std::vector<std::pair<Monomial, coefficient_type>> terms;
    for (auto const& [u, c] : a.terms()) {
      for (auto const& [v, d] : b.terms()) {
        if (auto w = mono_mul(u, v)) {
          terms.emplace_back(std::move(*w), c * d);
        }
      }
    }
    return normalize(a.n(), terms);
  }

  AlgebraElement star(AlgebraElement const& a) {
    // The star of a normal monomial is normal, but the rewrite rule is cheap
    // to run and keeps the invariants in one place.
    std::vector<std::pair<Monomial, coefficient_type>> terms;
    for (auto const& [m, c] : a.terms()) {
      terms.emplace_back(star(m), c);
    }
    return normalize(a.n(), terms);
  }

  std::string to_string(AlgebraElement const& a) {
    if (a.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [m, c] : a.terms()) {
      coefficient_type magnitude = c < 0 ? coefficient_type(-c) : c;
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      bool const unit = m == unit_monomial();
      if (magnitude != 1) {
        out += magnitude.str();
        if (!unit) {
          out += "*";
        }
      }
      if (!unit || magnitude == 1) {
        out += to_string(m);
      }
    }
    return out;
  }

}  // namespace htg
