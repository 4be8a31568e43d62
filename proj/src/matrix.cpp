#include "htg/matrix.hpp"

#include "htg/error.hpp"

namespace htg {

  AlgebraElement to_nf(Entry const& e, std::size_t n) {
    if (auto const* p = std::get_if<PForm>(&e)) {
      return normalize(n, *p);
    }
    return std::get<AlgebraElement>(e);
  }

  bool is_pform(Entry const& e) noexcept {
    return std::holds_alternative<PForm>(e);
  }

  std::string to_string(Entry const& e) {
    return std::visit([](auto const& v) { return to_string(v); }, e);
  }

  LMatrix::LMatrix(std::size_t n, std::size_t rows, std::size_t cols)
      : _n(n), _rows(rows), _cols(cols), _entries(rows * cols, PForm{}) {
    validate_parameters(n, 1);
    if (rows == 0 || cols == 0) {
      throw InvalidArgument("matrix dimensions must be positive");
    }
  }

  LMatrix LMatrix::identity(std::size_t n, std::size_t d) {
    LMatrix result(n, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      result.at(i, i) = PForm{{unit_monomial()}};
    }
    return result;
  }

  Entry const& LMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= _rows || j >= _cols) {
      throw InvalidArgument("matrix index out of range");
    }
    return _entries[i * _cols + j];
  }

  Entry& LMatrix::at(std::size_t i, std::size_t j) {
    if (i >= _rows || j >= _cols) {
      throw InvalidArgument("matrix index out of range");
    }
    return _entries[i * _cols + j];
  }

  LMatrix LMatrix::nf() const {
    LMatrix result = *this;
    for (auto& e : result._entries) {
      e = to_nf(e, _n);
    }
    return result;
  }

  namespace {
    void check_conformable(LMatrix const& a, LMatrix const& b) {
      if (a.n() != b.n()) {
        throw DimensionMismatch("matrices over different Leavitt algebras");
      }
      if (a.cols() != b.rows()) {
        throw DimensionMismatch(
            "cannot multiply " + std::to_string(a.rows()) + "x"
            + std::to_string(a.cols()) + " by " + std::to_string(b.rows())
            + "x" + std::to_string(b.cols()));
      }
    }

    bool all_pform(LMatrix const& a) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (!is_pform(a.at(i, j))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  LMatrix mat_mul_nf(LMatrix const& a, LMatrix const& b) {
    check_conformable(a, b);
    auto const    n   = a.n();
    LMatrix const lhs = a.nf();
    LMatrix const rhs = b.nf();
    LMatrix       result(n, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        AlgebraElement sum(n);
        for (std::size_t k = 0; k < a.cols(); ++k) {
          auto const& u = std::get<AlgebraElement>(lhs.at(i, k));
          auto const& v = std::get<AlgebraElement>(rhs.at(k, j));
          if (!u.is_zero() && !v.is_zero()) {
            sum += u * v;
          }
        }
        result.at(i, j) = std::move(sum);
      }
    }
    return result;
  }

  LMatrix mat_mul(LMatrix const& a, LMatrix const& b) {
    check_conformable(a, b);
    if (!all_pform(a) || !all_pform(b)) {
      return mat_mul_nf(a, b);
    }
    LMatrix result(a.n(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        PForm sum;
        for (std::size_t k = 0; k < a.cols(); ++k) {
          auto const& u = std::get<PForm>(a.at(i, k));
          auto const& v = std::get<PForm>(b.at(k, j));
          if (u.is_zero() || v.is_zero()) {
            continue;
          }
          auto p = pform_mul(u, v);
          sum.terms.insert(sum.terms.end(),
                           std::make_move_iterator(p.terms.begin()),
                           std::make_move_iterator(p.terms.end()));
        }
        result.at(i, j) = std::move(sum);
      }
    }
    return result;
  }

  LMatrix mat_add(LMatrix const& a, LMatrix const& b) {
    if (a.n() != b.n() || a.rows() != b.rows() || a.cols() != b.cols()) {
      throw DimensionMismatch("cannot add matrices of different shapes");
    }
    LMatrix result(a.n(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto const& u = a.at(i, j);
        auto const& v = b.at(i, j);
        if (is_pform(u) && is_pform(v)) {
          result.at(i, j) = pform_add(std::get<PForm>(u), std::get<PForm>(v));
        } else {
          result.at(i, j) = to_nf(u, a.n()) + to_nf(v, a.n());
        }
      }
    }
    return result;
  }

  LMatrix mat_star(LMatrix const& a) {
    LMatrix result(a.n(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        result.at(j, i) = std::visit(
            [](auto const& v) -> Entry { return star(v); }, a.at(i, j));
      }
    }
    return result;
  }

  bool equals(LMatrix const& a, LMatrix const& b) {
    if (a.n() != b.n() || a.rows() != b.rows() || a.cols() != b.cols()) {
      return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (to_nf(a.at(i, j), a.n()) != to_nf(b.at(i, j), b.n())) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_identity(LMatrix const& a) {
    if (!a.is_square()) {
      return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto const e = to_nf(a.at(i, j), a.n());
        if (i == j ? !e.is_one() : !e.is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_unitary(LMatrix const& x) {
    if (!x.is_square()) {
      return false;
    }
    auto const xs = mat_star(x);
    return is_identity(mat_mul(x, xs)) && is_identity(mat_mul(xs, x));
  }

  bool is_pform_matrix(LMatrix const& x) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) {
        auto const& e = x.at(i, j);
        if (auto const* a = std::get_if<AlgebraElement>(&e);
            a != nullptr && !a->has_unit_coefficients()) {
          return false;
        }
      }
    }
    return true;
  }

  UnitaryPMatrix::UnitaryPMatrix(LMatrix base) : _base(std::move(base)) {
    if (!_base.is_square()) {
      throw DimensionMismatch("a unitary matrix must be square");
    }
    if (!is_pform_matrix(_base)) {
      throw InvalidArgument("entries are not all P-forms");
    }
    if (!is_unitary(_base)) {
      throw NotUnitary("X X^* = X^* X = I fails");
    }
  }

}  // namespace htg
