#include "htg/iso.hpp"

#include <numeric>

#include "htg/error.hpp"

namespace htg {

  LMatrix shift_matrix(std::size_t n, std::size_t r) {
    validate_parameters(n, r);
    LMatrix u(n, r + n - 1, r);
    for (std::size_t i = 0; i + 1 < r; ++i) {
      u.at(i, i) = PForm{{unit_monomial()}};
    }
    for (std::size_t k = 1; k <= n; ++k) {
      u.at(r - 2 + k, r - 1) = PForm{{x_generator(k)}};
    }
    return u;
  }

  LMatrix shift_up(LMatrix const& a) {
    if (!a.is_square()) {
      throw DimensionMismatch("shift_up: matrix must be square");
    }
    auto const u = shift_matrix(a.n(), a.rows());
    return mat_mul(mat_mul(u, a), mat_star(u));
  }

  LMatrix shift_down(LMatrix const& b) {
    if (!b.is_square()) {
      throw DimensionMismatch("shift_down: matrix must be square");
    }
    if (b.rows() <= b.n() - 1) {
      throw DimensionMismatch("shift_down: size " + std::to_string(b.rows())
                              + " must exceed n - 1 = "
                              + std::to_string(b.n() - 1));
    }
    auto const u = shift_matrix(b.n(), b.rows() - (b.n() - 1));
    return mat_mul(mat_mul(mat_star(u), b), u);
  }

  IsoPlan find_l(std::size_t n, std::size_t r, std::size_t s) {
    validate_parameters(n, r);
    validate_parameters(n, s);
    auto const m = n - 1;
    if (std::gcd(m, r) != std::gcd(m, s)) {
      throw NotIsomorphic("G_{" + std::to_string(n) + "," + std::to_string(r)
                          + "} and G_{" + std::to_string(n) + ","
                          + std::to_string(s) + "} are not isomorphic: gcd("
                          + std::to_string(m) + ", " + std::to_string(r)
                          + ") = " + std::to_string(std::gcd(m, r)) + " but gcd("
                          + std::to_string(m) + ", " + std::to_string(s)
                          + ") = " + std::to_string(std::gcd(m, s)));
    }
    // every residue class mod n - 1 has a representative in [1, n - 1]
    for (std::size_t l = 1; l <= std::max<std::size_t>(m, 1); ++l) {
      if (std::gcd(l, m) == 1 && (l * r) % m == s % m) {
        auto const diff = static_cast<std::ptrdiff_t>(s)
                          - static_cast<std::ptrdiff_t>(l * r);
        return IsoPlan{n, r, s, l, diff / static_cast<std::ptrdiff_t>(m)};
      }
    }
    // unreachable when the gcds agree
    throw NotIsomorphic("no multiplier l found");
  }

  bool classify(std::size_t n, std::size_t r, std::size_t m, std::size_t s) {
    validate_parameters(n, r);
    validate_parameters(m, s);
    return m == n && std::gcd(n - 1, r) == std::gcd(n - 1, s);
  }

  ////////////////////////////////////////////////////////////////////////
  // Embedding L_n -> M_d(L_n)
  ////////////////////////////////////////////////////////////////////////

  LMatrix embed_monomial(Monomial const& m, GeneratorSet const& g) {
    LMatrix result = LMatrix::identity(g.n, g.d);
    for (auto i : m.y) {
      result = mat_mul(result, g.Y[i - 1]);
    }
    // x_J = x_{j_m} ... x_{j_1}
    for (auto it = m.x.rbegin(); it != m.x.rend(); ++it) {
      result = mat_mul(result, g.X[*it - 1]);
    }
    return result;
  }

  namespace {
    LMatrix scaled(LMatrix const& a, coefficient_type const& c) {
      LMatrix result = a.nf();
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          auto const& e = std::get<AlgebraElement>(result.at(i, j));
          std::vector<std::pair<Monomial, coefficient_type>> terms;
          for (auto const& [m, k] : e.terms()) {
            terms.emplace_back(m, k * c);
          }
          result.at(i, j) = normalize(a.n(), terms);
        }
      }
      return result;
    }
  }  // namespace

  LMatrix embed_entry(Entry const& a, GeneratorSet const& g) {
    LMatrix result(g.n, g.d, g.d);
    if (auto const* p = std::get_if<PForm>(&a)) {
      for (auto const& m : p->terms) {
        result = mat_add(result, embed_monomial(m, g));
      }
      return result;
    }
    result = result.nf();
    for (auto const& [m, c] : std::get<AlgebraElement>(a).terms()) {
      result = mat_add(result, scaled(embed_monomial(m, g), c));
    }
    return result;
  }

  LMatrix embed_blocks(LMatrix const& a, GeneratorSet const& g) {
    if (a.n() != g.n) {
      throw InvalidArgument("embed_blocks: arity mismatch");
    }
    auto const d = g.d;
    LMatrix    result(a.n(), a.rows() * d, a.cols() * d);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto const block = embed_entry(a.at(i, j), g);
        for (std::size_t u = 0; u < d; ++u) {
          for (std::size_t v = 0; v < d; ++v) {
            result.at(i * d + u, j * d + v) = block.at(u, v);
          }
        }
      }
    }
    return result;
  }

  LMatrix matrix_iso(IsoPlan const& plan, GeneratorSet const& g, LMatrix const& a) {
    if (a.n() != plan.n || a.rows() != plan.r || a.cols() != plan.r) {
      throw DimensionMismatch("matrix_iso: expected a " + std::to_string(plan.r)
                              + "x" + std::to_string(plan.r)
                              + " matrix over L_" + std::to_string(plan.n));
    }
    if (g.n != plan.n || g.d != plan.l) {
      throw InvalidArgument("matrix_iso: generator set does not match plan");
    }
    LMatrix result = plan.l == 1 ? a : embed_blocks(a, g);
    for (std::ptrdiff_t k = 0; k < plan.shift_steps; ++k) {
      result = shift_up(result);
    }
    for (std::ptrdiff_t k = 0; k < -plan.shift_steps; ++k) {
      result = shift_down(result);
    }
    return result;
  }

  GroupIsomorphism::GroupIsomorphism(std::size_t             n,
                                     std::size_t             r,
                                     std::size_t             s,
                                     GeneratorOptions const& options)
      : _plan(find_l(n, r, s)), _generators(build_generators(_plan.l, n, options)) {}

  LMatrix GroupIsomorphism::matrix_image(Symbol const& g) const {
    if (g.n() != _plan.n || g.r() != _plan.r) {
      throw InvalidArgument("element is not in G_{" + std::to_string(_plan.n)
                            + "," + std::to_string(_plan.r) + "}");
    }
    return matrix_iso(_plan, _generators, symbol_to_lmatrix(g));
  }

  Symbol GroupIsomorphism::operator()(Symbol const& g) const {
    auto const image = matrix_image(g);
    try {
      return matrix_to_symbol(image, RecognitionMode::direct);
    } catch (NotInGroupImage const&) {
      return matrix_to_symbol(image, RecognitionMode::evaluate);
    }
  }

  Symbol group_iso(std::size_t n, std::size_t r, std::size_t s, Symbol const& g) {
    return GroupIsomorphism(n, r, s)(g);
  }

}  // namespace htg
