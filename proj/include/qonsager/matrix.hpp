#pragma once

// Dense square matrices over the rational-function field.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qonsager/free_algebra.hpp"
#include "qonsager/rational_function.hpp"

namespace qonsager {

  class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);  // zero matrix

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::vector<RationalFunction> const& diag);
    static Matrix from_rows(std::vector<std::vector<RationalFunction>> rows);
    // Rows of canonical scalar strings, as produced by to_rows().
    static Matrix parse_rows(std::vector<std::vector<std::string>> const& rows);

    std::size_t dim() const noexcept {
      return dim_;
    }

    RationalFunction const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * dim_ + j];
    }
    RationalFunction& operator()(std::size_t i, std::size_t j) {
      return data_[i * dim_ + j];
    }
    std::vector<RationalFunction> const& entries() const noexcept {
      return data_;
    }

    bool is_zero() const;
    bool is_scalar() const;  // c * I
    bool is_upper_triangular() const;
    bool is_lower_triangular() const;
    bool is_constant() const;  // all entries in Q

    // First nonzero entry in row-major order.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    Matrix operator-() const;
    Matrix operator+(Matrix const& y) const;
    Matrix operator-(Matrix const& y) const;
    Matrix operator*(Matrix const& y) const;
    Matrix scaled(RationalFunction const& c) const;
    Matrix transpose() const;
    Matrix pow(unsigned e) const;

    Matrix evaluate(EvaluationPoint const& pt) const;  // constant entries
    Matrix substitute(std::string_view var, RationalFunction const& v) const;
    VarMask variables() const;

    friend bool operator==(Matrix const& x, Matrix const& y) {
      return x.dim_ == y.dim_ && x.data_ == y.data_;
    }
    friend bool operator!=(Matrix const& x, Matrix const& y) {
      return !(x == y);
    }

    std::vector<std::vector<std::string>> to_rows() const;
    std::string                           to_string() const;

   private:
    std::size_t                   dim_ = 0;
    std::vector<RationalFunction> data_;
  };

  inline Matrix operator*(RationalFunction const& c, Matrix const& m) {
    return m.scaled(c);
  }

  // Exact or seeded-probabilistic comparison, entry by entry.
  bool equals(Matrix const& x, Matrix const& y, EqualityMode const& mode);

  Matrix kronecker(Matrix const& x, Matrix const& y);

  // m in the given tensor slot (1..3) of (F^factor_dim)^{(x)3}.
  Matrix tensor_slot_embed(Matrix const& m, int slot, std::size_t factor_dim);

  // Fraction-free (Bareiss) elimination over the polynomial layer.
  RationalFunction determinant(Matrix const& m);
  // Throws SingularMatrixError.
  Matrix inverse(Matrix const& m);

  // Homomorphic extension into dim x dim matrices; every image must share
  // one dimension (DimensionMismatchError otherwise).
  Matrix substitute(NCPolynomial const& x, std::map<Gen, Matrix> const& images);

  // Incremental row-echelon basis of a subspace of F^length.
  class SpanBasis {
   public:
    explicit SpanBasis(std::size_t length) : length_(length) {}

    // Returns true when v was independent of the current span.
    bool        insert(std::vector<RationalFunction> v);
    bool        contains(std::vector<RationalFunction> v) const;
    std::size_t rank() const noexcept {
      return rows_.size();
    }
    std::size_t length() const noexcept {
      return length_;
    }

   private:
    // Reduces v against the basis; returns the pivot of the remainder.
    std::optional<std::size_t> reduce(std::vector<RationalFunction>& v) const;

    std::size_t                                length_;
    std::vector<std::vector<RationalFunction>> rows_;
    std::vector<std::size_t>                   pivots_;
  };

  std::size_t rank_of_span(std::vector<Matrix> const& matrices);

  struct ClosureResult {
    std::size_t dimension  = 0;
    bool        stabilized = false;  // false: round cap exceeded
    std::size_t rounds     = 0;
  };

  // Dimension of the unital algebra generated by `matrices`, grown by one
  // left/right multiplication layer per round.  `cap` bounds the number of
  // rounds; the default dim^2 + 1 always suffices.
  ClosureResult algebra_closure_dimension(std::vector<Matrix> const& matrices,
                                          std::optional<std::size_t> cap
                                          = std::nullopt);

}  // namespace qonsager
