#include <random>

#include <gtest/gtest.h>

#include "qonsager/errors.hpp"
#include "qonsager/matrix.hpp"

using namespace qonsager;
using RF = RationalFunction;

namespace {

  // Entries are small rationals or simple expressions in x, y.
  Matrix random_matrix(std::mt19937_64& rng, std::size_t n, bool symbolic) {
    std::uniform_int_distribution<int> c(-4, 4), pick(0, 3);
    RF const x = RF::variable("x"), y = RF::variable("y");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        RF e(c(rng));
        if (symbolic) {
          switch (pick(rng)) {
            case 0: e = e + RF(c(rng)) * x; break;
            case 1: e = e * y + x * x; break;
            case 2: e = e / (x + RF(5)); break;
            default: break;
          }
        }
        m(i, j) = e;
      }
    }
    return m;
  }

  // Laplace expansion along the first row: the oracle for determinant().
  RF cofactor_det(Matrix const& m) {
    std::size_t const n = m.dim();
    if (n == 1) {
      return m(0, 0);
    }
    RF acc;
    for (std::size_t k = 0; k < n; ++k) {
      Matrix minor(n - 1);
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0, jj = 0; j < n; ++j) {
          if (j != k) {
            minor(i - 1, jj++) = m(i, j);
          }
        }
      }
      RF term = m(0, k) * cofactor_det(minor);
      acc     = k % 2 ? acc - term : acc + term;
    }
    return acc;
  }

}  // namespace

TEST(Matrix, ArithmeticBasics) {
  Matrix a = Matrix::parse_rows({{"1", "q"}, {"0", "2"}});
  Matrix b = Matrix::parse_rows({{"0", "1"}, {"1", "0"}});
  EXPECT_EQ(a * b, Matrix::parse_rows({{"q", "1"}, {"2", "0"}}));
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(b.pow(2), Matrix::identity(2));
  EXPECT_TRUE(a.is_upper_triangular());
  EXPECT_FALSE(b.is_upper_triangular());
  EXPECT_TRUE(Matrix::identity(3).scaled(RF(7)).is_scalar());
  EXPECT_EQ(*(b - b + a).first_nonzero(), std::make_pair(std::size_t(0), std::size_t(0)));
}

TEST(Matrix, RowsRoundTrip) {
  Matrix a = Matrix::parse_rows({{"(q^2 - 1)/q", "1/n"}, {"-a1", "0"}});
  EXPECT_EQ(Matrix::parse_rows(a.to_rows()), a);
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      Matrix m = random_matrix(rng, n, trial % 2 == 1);
      EXPECT_EQ(determinant(m), cofactor_det(m)) << m.to_string();
    }
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    Matrix x = random_matrix(rng, 3, true), y = random_matrix(rng, 3, true);
    EXPECT_EQ(determinant(x * y), determinant(x) * determinant(y));
  }
}

TEST(Matrix, InverseOfRandomMatrices) {
  std::mt19937_64 rng(3);
  int             tested = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Matrix m = random_matrix(rng, 1 + trial % 4, trial % 3 != 0);
    if (determinant(m).is_zero()) {
      EXPECT_THROW(inverse(m), SingularMatrixError);
      continue;
    }
    Matrix inv = inverse(m);
    EXPECT_EQ(m * inv, Matrix::identity(m.dim()));
    EXPECT_EQ(inv * m, Matrix::identity(m.dim()));
    ++tested;
  }
  EXPECT_GT(tested, 6);
}

TEST(Matrix, InverseEdgeCases) {
  EXPECT_EQ(inverse(Matrix::identity(4)), Matrix::identity(4));
  EXPECT_THROW(inverse(Matrix(3)), SingularMatrixError);
  EXPECT_THROW(inverse(Matrix::parse_rows({{"1", "q"}, {"1/q", "1"}})),
               SingularMatrixError);
}

TEST(Matrix, InverseOfTwoIdempotentCombination) {
  // a^-1 E0 + a E1 with E0 + E1 = I.
  RF     a   = RF::variable("a");
  Matrix e0  = Matrix::parse_rows({{"1", "x"}, {"0", "0"}});
  Matrix e1  = Matrix::identity(2) - e0;
  Matrix psi = a.inverse() * e0 + a * e1;
  EXPECT_EQ(inverse(psi), a * e0 + a.inverse() * e1);
}

TEST(Kronecker, MixedProductLaw) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a = random_matrix(rng, 2, true), b = random_matrix(rng, 2, true);
    Matrix c = random_matrix(rng, 2, true), d = random_matrix(rng, 2, true);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
  }
}

TEST(Kronecker, IdentityAndDimensions) {
  EXPECT_EQ(kronecker(Matrix::identity(2), Matrix::identity(3)), Matrix::identity(6));
  EXPECT_EQ(kronecker(Matrix(5), Matrix(25)).dim(), 125U);
}

TEST(Kronecker, SlotEmbedding) {
  Matrix m  = Matrix::parse_rows({{"1", "2"}, {"3", "4"}});
  Matrix id = Matrix::identity(2);
  EXPECT_EQ(tensor_slot_embed(m, 1, 2), kronecker(kronecker(m, id), id));
  EXPECT_EQ(tensor_slot_embed(m, 2, 2), kronecker(kronecker(id, m), id));
  EXPECT_EQ(tensor_slot_embed(m, 3, 2), kronecker(kronecker(id, id), m));
}

TEST(Substitute, HomomorphismIntoMatrices) {
  std::map<Gen, Matrix> img{{Gen::A, Matrix::parse_rows({{"0", "1"}, {"0", "0"}})},
                            {Gen::B, Matrix::parse_rows({{"0", "0"}, {"1", "0"}})}};
  NCPolynomial ab = NCPolynomial(Gen::A) * NCPolynomial(Gen::B);
  EXPECT_EQ(substitute(ab, img), img[Gen::A] * img[Gen::B]);
  EXPECT_EQ(substitute(commutator(Gen::A, Gen::B), img),
            Matrix::parse_rows({{"1", "0"}, {"0", "-1"}}));
  EXPECT_EQ(substitute(NCPolynomial(RF(3)), img), Matrix::identity(2).scaled(RF(3)));
  img[Gen::B] = Matrix::identity(3);
  EXPECT_THROW(substitute(ab, img), DimensionMismatchError);
}

TEST(Span, RankExamples) {
  Matrix m = Matrix::parse_rows({{"1", "q"}, {"2", "x"}});
  EXPECT_EQ(rank_of_span({Matrix::identity(3)}), 1U);
  EXPECT_EQ(rank_of_span({m, m.scaled(RF(2))}), 1U);
  EXPECT_EQ(rank_of_span({m, Matrix::identity(2), m + Matrix::identity(2)}), 2U);

  SpanBasis s(3);
  EXPECT_TRUE(s.insert({RF(1), RF(0), RF::variable("q")}));
  EXPECT_FALSE(s.insert({RF(2), RF(0), RF::parse("2*q")}));
  EXPECT_TRUE(s.contains({RF(-1), RF(0), RF::parse("-q")}));
  EXPECT_FALSE(s.contains({RF(0), RF(1), RF(0)}));
  EXPECT_EQ(s.rank(), 1U);
}

TEST(Closure, ScalarAndFullAlgebra) {
  EXPECT_EQ(algebra_closure_dimension({Matrix::identity(3).scaled(RF(4))}).dimension, 1U);

  // Lower/upper shifts generate all of Mat_3.
  Matrix up = Matrix::parse_rows({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  ClosureResult full = algebra_closure_dimension({up, up.transpose()});
  EXPECT_TRUE(full.stabilized);
  EXPECT_EQ(full.dimension, 9U);

  // Upper triangular algebra.
  Matrix d = Matrix::diagonal({RF(1), RF(2), RF(3)});
  ClosureResult tri = algebra_closure_dimension({up, d});
  EXPECT_TRUE(tri.stabilized);
  EXPECT_EQ(tri.dimension, 6U);
}

TEST(Closure, CapExceededIsReportedDistinctly) {
  Matrix up = Matrix::parse_rows({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  ClosureResult r = algebra_closure_dimension({up, up.transpose()}, 1);
  EXPECT_FALSE(r.stabilized);
  EXPECT_LT(r.dimension, 9U);
}
