#include "qonsager/matrix.hpp"

#include <sstream>

#include "qonsager/errors.hpp"

namespace qonsager {

  Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::diagonal(std::vector<RationalFunction> const& diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
      m(i, i) = diag[i];
    }
    return m;
  }

  Matrix Matrix::from_rows(std::vector<std::vector<RationalFunction>> rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw DimensionMismatchError("matrix rows must form a square");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = std::move(rows[i][j]);
      }
    }
    return m;
  }

  Matrix Matrix::parse_rows(std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::vector<RationalFunction>> r;
    for (auto const& row : rows) {
      auto& out = r.emplace_back();
      for (auto const& s : row) {
        out.push_back(RationalFunction::parse(s));
      }
    }
    return from_rows(std::move(r));
  }

  bool Matrix::is_zero() const {
    for (auto const& x : data_) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool Matrix::is_scalar() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        bool ok = i == j ? (*this)(i, j) == (*this)(0, 0)
                         : (*this)(i, j).is_zero();
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  bool Matrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!(*this)(i, j).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  bool Matrix::is_lower_triangular() const {
    return transpose().is_upper_triangular();
  }

  bool Matrix::is_constant() const {
    for (auto const& x : data_) {
      if (!x.is_constant()) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  Matrix::first_nonzero() const {
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!data_[k].is_zero()) {
        return std::pair{k / dim_, k % dim_};
      }
    }
    return std::nullopt;
  }

  namespace {
    void require_same(Matrix const& x, Matrix const& y) {
      if (x.dim() != y.dim()) {
        throw DimensionMismatchError(
            "matrix dimensions " + std::to_string(x.dim()) + " and "
            + std::to_string(y.dim()) + " differ");
      }
    }
  }  // namespace

  Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) {
      x = -x;
    }
    return r;
  }

  Matrix Matrix::operator+(Matrix const& y) const {
    require_same(*this, y);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!y.data_[k].is_zero()) {
        r.data_[k] += y.data_[k];
      }
    }
    return r;
  }

  Matrix Matrix::operator-(Matrix const& y) const {
    require_same(*this, y);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!y.data_[k].is_zero()) {
        r.data_[k] -= y.data_[k];
      }
    }
    return r;
  }

  Matrix Matrix::operator*(Matrix const& y) const {
    require_same(*this, y);
    std::size_t const n = dim_;
    // Column indices of the nonzero entries of each row of y.
    std::vector<std::vector<std::size_t>> support(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!y(k, j).is_zero()) {
          support[k].push_back(j);
        }
      }
    }
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        RationalFunction const& a = (*this)(i, k);
        if (a.is_zero()) {
          continue;
        }
        for (std::size_t j : support[k]) {
          r(i, j) += a * y(k, j);
        }
      }
    }
    return r;
  }

  Matrix Matrix::scaled(RationalFunction const& c) const {
    Matrix r(dim_);
    if (c.is_zero()) {
      return r;
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!data_[k].is_zero()) {
        r.data_[k] = c * data_[k];
      }
    }
    return r;
  }

  Matrix Matrix::transpose() const {
    Matrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        r(j, i) = (*this)(i, j);
      }
    }
    return r;
  }

  Matrix Matrix::pow(unsigned e) const {
    Matrix r = identity(dim_), b = *this;
    while (e) {
      if (e & 1U) {
        r = r * b;
      }
      e >>= 1U;
      if (e) {
        b = b * b;
      }
    }
    return r;
  }

  Matrix Matrix::evaluate(EvaluationPoint const& pt) const {
    Matrix r(dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!data_[k].is_zero()) {
        r.data_[k] = RationalFunction(data_[k].evaluate(pt));
      }
    }
    return r;
  }

  Matrix Matrix::substitute(std::string_view        var,
                            RationalFunction const& v) const {
    Matrix r(dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      r.data_[k] = data_[k].substitute(var, v);
    }
    return r;
  }

  VarMask Matrix::variables() const {
    VarMask m = 0;
    for (auto const& x : data_) {
      m |= x.variables();
    }
    return m;
  }

  std::vector<std::vector<std::string>> Matrix::to_rows() const {
    std::vector<std::vector<std::string>> rows(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        rows[i].push_back((*this)(i, j).to_string());
      }
    }
    return rows;
  }

  std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      out << (i ? "; " : "");
      for (std::size_t j = 0; j < dim_; ++j) {
        out << (j ? ", " : "") << (*this)(i, j).to_string();
      }
    }
    out << "]";
    return out.str();
  }

  bool equals(Matrix const& x, Matrix const& y, EqualityMode const& mode) {
    if (x.dim() != y.dim()) {
      return false;
    }
    for (std::size_t k = 0; k < x.entries().size(); ++k) {
      if (!equals(x.entries()[k], y.entries()[k], mode)) {
        return false;
      }
    }
    return true;
  }

  Matrix kronecker(Matrix const& x, Matrix const& y) {
    std::size_t const m = x.dim(), n = y.dim();
    Matrix            r(m * n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        RationalFunction const& a = x(i, j);
        if (a.is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            if (!y(k, l).is_zero()) {
              r(i * n + k, j * n + l) = a.is_one() ? y(k, l) : a * y(k, l);
            }
          }
        }
      }
    }
    return r;
  }

  Matrix tensor_slot_embed(Matrix const& m, int slot, std::size_t factor_dim) {
    if (m.dim() != factor_dim) {
      throw DimensionMismatchError("tensor_slot_embed: expected a "
                                   + std::to_string(factor_dim) + "x"
                                   + std::to_string(factor_dim) + " matrix");
    }
    Matrix const id = Matrix::identity(factor_dim);
    switch (slot) {
      case 1:
        return kronecker(kronecker(m, id), id);
      case 2:
        return kronecker(kronecker(id, m), id);
      case 3:
        return kronecker(kronecker(id, id), m);
      default:
        throw Error("tensor slot must be 1, 2 or 3");
    }
  }

  namespace {
    Polynomial lcm(Polynomial const& x, Polynomial const& y) {
      Polynomial g = gcd(x, y);
      return *x.divide_exact(g) * y;
    }

    Polynomial exact(Polynomial const& num, Polynomial const& den) {
      auto r = num.divide_exact(den);
      if (!r) {
        throw Error("fraction-free elimination: inexact division");
      }
      return *r;
    }

    // Rows scaled by the lcm of their denominators.
    std::vector<std::vector<Polynomial>> clear_rows(
        Matrix const& m, std::vector<Polynomial>& scale) {
      std::size_t const n = m.dim();
      std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n));
      scale.assign(n, Polynomial(1));
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial l(1);
        for (std::size_t j = 0; j < n; ++j) {
          if (!m(i, j).is_zero() && !m(i, j).denominator().is_one()) {
            l = lcm(l, m(i, j).denominator());
          }
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto const& x = m(i, j);
          if (!x.is_zero()) {
            p[i][j] = x.numerator() * exact(l, x.denominator());
          }
        }
        scale[i] = l;
      }
      return p;
    }
  }  // namespace

  RationalFunction determinant(Matrix const& m) {
    std::size_t const       n = m.dim();
    std::vector<Polynomial> scale;
    auto                    p = clear_rows(m, scale);
    Polynomial              prev(1);
    bool                    negate = false;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && p[piv][k].is_zero()) {
        ++piv;
      }
      if (piv == n) {
        return RationalFunction(0);
      }
      if (piv != k) {
        std::swap(p[piv], p[k]);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          p[i][j] = exact(p[k][k] * p[i][j] - p[i][k] * p[k][j], prev);
        }
        p[i][k] = Polynomial();
      }
      prev = p[k][k];
    }
    Polynomial denom(1);
    for (auto const& s : scale) {
      denom *= s;
    }
    RationalFunction d = RationalFunction::fraction(prev, denom);
    return negate ? -d : d;
  }

  Matrix inverse(Matrix const& m) {
    std::size_t const       n = m.dim();
    std::vector<Polynomial> scale;
    auto                    p = clear_rows(m, scale);
    for (std::size_t i = 0; i < n; ++i) {
      p[i].resize(2 * n);
      p[i][n + i] = Polynomial(1);
    }
    // Fraction-free Gauss-Jordan on [P | I].
    Polynomial prev(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && p[piv][k].is_zero()) {
        ++piv;
      }
      if (piv == n) {
        throw SingularMatrixError();
      }
      std::swap(p[piv], p[k]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) {
          continue;
        }
        for (std::size_t j = 0; j < 2 * n; ++j) {
          if (j == k) {
            continue;
          }
          p[i][j] = exact(p[k][k] * p[i][j] - p[i][k] * p[k][j], prev);
        }
        p[i][k] = Polynomial();
      }
      prev = p[k][k];
    }
    // Left block is now diagonal; P^-1 = right block / diagonal and
    // M^-1 = P^-1 * diag(scale).
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!p[i][n + j].is_zero()) {
          r(i, j) = RationalFunction::fraction(p[i][n + j] * scale[j], p[i][i]);
        }
      }
    }
    return r;
  }

  Matrix substitute(NCPolynomial const& x, std::map<Gen, Matrix> const& images) {
    if (images.empty()) {
      throw Error("substitute: no matrix images");
    }
    std::size_t const n = images.begin()->second.dim();
    for (auto const& [g, m] : images) {
      if (m.dim() != n) {
        throw DimensionMismatchError("image of " + std::string(gen_name(g))
                                     + " has dimension "
                                     + std::to_string(m.dim()) + ", expected "
                                     + std::to_string(n));
      }
    }
    return substitute<Matrix>(x, images, Matrix::identity(n));
  }

  std::optional<std::size_t>
  SpanBasis::reduce(std::vector<RationalFunction>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      RationalFunction const c = v[pivots_[r]];
      if (c.is_zero()) {
        continue;
      }
      auto const& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < length_; ++j) {
        if (!row[j].is_zero()) {
          v[j] -= c * row[j];
        }
      }
    }
    for (std::size_t j = 0; j < length_; ++j) {
      if (!v[j].is_zero()) {
        return j;
      }
    }
    return std::nullopt;
  }

  bool SpanBasis::insert(std::vector<RationalFunction> v) {
    if (v.size() != length_) {
      throw DimensionMismatchError("span vector has the wrong length");
    }
    auto piv = reduce(v);
    if (!piv) {
      return false;
    }
    RationalFunction inv = v[*piv].inverse();
    for (std::size_t j = *piv; j < length_; ++j) {
      if (!v[j].is_zero()) {
        v[j] *= inv;
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(*piv);
    return true;
  }

  bool SpanBasis::contains(std::vector<RationalFunction> v) const {
    if (v.size() != length_) {
      throw DimensionMismatchError("span vector has the wrong length");
    }
    return !reduce(v);
  }

  std::size_t rank_of_span(std::vector<Matrix> const& matrices) {
    if (matrices.empty()) {
      return 0;
    }
    std::size_t const n = matrices.front().dim();
    SpanBasis         basis(n * n);
    for (auto const& m : matrices) {
      if (m.dim() != n) {
        throw DimensionMismatchError("rank_of_span: mixed dimensions");
      }
      basis.insert(m.entries());
    }
    return basis.rank();
  }

  ClosureResult algebra_closure_dimension(std::vector<Matrix> const& matrices,
                                          std::optional<std::size_t> cap) {
    if (matrices.empty()) {
      return {1, true, 0};
    }
    std::size_t const n = matrices.front().dim();
    for (auto const& m : matrices) {
      if (m.dim() != n) {
        throw DimensionMismatchError("closure: mixed dimensions");
      }
    }
    std::size_t const   limit = cap.value_or(n * n + 1);
    SpanBasis           basis(n * n);
    std::vector<Matrix> frontier = {Matrix::identity(n)};
    basis.insert(frontier.front().entries());
    ClosureResult res;
    while (!frontier.empty()) {
      if (res.rounds == limit) {
        res.dimension = basis.rank();
        return res;
      }
      ++res.rounds;
      std::vector<Matrix> next;
      for (auto const& f : frontier) {
        for (auto const& g : matrices) {
          for (Matrix const& p : {Matrix(f * g), Matrix(g * f)}) {
            if (basis.rank() < n * n && basis.insert(p.entries())) {
              next.push_back(p);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    res.dimension  = basis.rank();
    res.stabilized = true;
    return res;
  }

}  // namespace qonsager
