#include "htg/correspondence.hpp"

#include <algorithm>

#include "htg/error.hpp"

namespace htg {

  LMatrix symbol_to_lmatrix(Symbol const& g) {
    auto const reduced = reduce(g);
    LMatrix    x(g.n(), g.r(), g.r());
    for (std::size_t t = 0; t < reduced.size(); ++t) {
      auto const& u = reduced.domain()[t];
      auto const& v = reduced.range()[t];
      std::get<PForm>(x.at(u.root - 1, v.root - 1))
          .terms.push_back(Monomial{u.tail, v.tail});
    }
    return x;
  }

  UnitaryPMatrix symbol_to_matrix(Symbol const& g) {
    return UnitaryPMatrix(symbol_to_lmatrix(g));
  }

  namespace {

    Symbol direct(LMatrix const& x) {
      auto const              n = x.n();
      auto const              s = x.rows();
      std::vector<RootedWord> domain, range;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          auto const& e = x.at(i, j);
          auto        add = [&](Monomial const& m) {
            domain.push_back(RootedWord{i + 1, m.y});
            range.push_back(RootedWord{j + 1, m.x});
          };
          if (auto const* p = std::get_if<PForm>(&e)) {
            std::for_each(p->terms.begin(), p->terms.end(), add);
          } else {
            auto const& a = std::get<AlgebraElement>(e);
            if (!a.has_unit_coefficients()) {
              throw NotInGroupImage("entry (" + std::to_string(i + 1) + ", "
                                    + std::to_string(j + 1)
                                    + ") is not a P-form");
            }
            for (auto const& [m, c] : a.terms()) {
              add(m);
            }
          }
        }
      }
      if (!is_expansion(n, s, domain) || !is_expansion(n, s, range)) {
        if (!is_unitary(x)) {
          throw NotUnitary("matrix is not unitary");
        }
        throw NotInGroupImage(
            "the monomials of the entries do not form expansions");
      }
      return reduce(Symbol(Expansion(n, s, std::move(domain)),
                           Expansion(n, s, std::move(range))));
    }

    void next_word(word_type& w, std::size_t n) {
      for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] < n) {
          ++w[i];
          return;
        }
        w[i] = 1;
      }
    }

    // Tries to read off a symbol by acting on every column y_J e_j with
    // |J| = depth.  Returns nullopt if some column is not sent to a single
    // monomial y_I e_i.
    std::optional<Symbol> evaluate_at(std::vector<AlgebraElement> const& nf,
                                      std::size_t                        n,
                                      std::size_t                        s,
                                      std::size_t                        depth) {
      std::vector<RootedWord> domain, range;
      std::size_t             count = 1;
      for (std::size_t k = 0; k < depth; ++k) {
        count *= n;
      }
      for (std::size_t j = 0; j < s; ++j) {
        word_type word(depth, 1);
        for (std::size_t c = 0; c < count; ++c, next_word(word, n)) {
          Monomial const            column{word, {}};
          std::optional<RootedWord> image;
          for (std::size_t i = 0; i < s; ++i) {
            auto const& entry = nf[i * s + j];
            if (entry.is_zero()) {
              continue;
            }
            std::vector<std::pair<Monomial, coefficient_type>> terms;
            for (auto const& [m, coeff] : entry.terms()) {
              if (auto p = mono_mul(m, column)) {
                terms.emplace_back(std::move(*p), coeff);
              }
            }
            auto const value = normalize(n, terms);
            if (value.is_zero()) {
              continue;
            }
            if (image || value.terms().size() != 1) {
              return std::nullopt;
            }
            auto const& [m, coeff] = *value.terms().begin();
            if (coeff != 1 || !m.x.empty()) {
              return std::nullopt;
            }
            image = RootedWord{i + 1, m.y};
          }
          if (!image) {
            return std::nullopt;
          }
          domain.push_back(std::move(*image));
          range.push_back(RootedWord{j + 1, word});
        }
      }
      if (!is_expansion(n, s, domain)) {
        return std::nullopt;
      }
      return reduce(Symbol(Expansion(n, s, std::move(domain)),
                           Expansion(n, s, std::move(range))));
    }

    Symbol evaluate(LMatrix const& x, std::size_t cap) {
      if (!is_unitary(x)) {
        throw NotUnitary("matrix is not unitary");
      }
      auto const                  n = x.n();
      auto const                  s = x.rows();
      std::vector<AlgebraElement> nf;
      std::size_t                 start = 0;
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
          nf.push_back(to_nf(x.at(i, j), n));
          for (auto const& [m, c] : nf.back().terms()) {
            start = std::max(start, m.x.size());
          }
        }
      }
      for (std::size_t depth = start; depth <= start + cap; ++depth) {
        auto candidate = evaluate_at(nf, n, s, depth);
        if (candidate && equals(symbol_to_lmatrix(*candidate), x)) {
          return *candidate;
        }
      }
      throw NotInGroupImage("no symbol recovered within "
                            + std::to_string(cap) + " levels beyond depth "
                            + std::to_string(start));
    }
  }  // namespace

  Symbol matrix_to_symbol(LMatrix const&  x,
                          RecognitionMode mode,
                          std::size_t     cap) {
    if (!x.is_square()) {
      throw DimensionMismatch("matrix_to_symbol: matrix must be square");
    }
    return mode == RecognitionMode::direct ? direct(x) : evaluate(x, cap);
  }

}  // namespace htg
