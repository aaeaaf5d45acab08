#include <gtest/gtest.h>

#include "qonsager/errors.hpp"
#include "qonsager/representation.hpp"

using namespace qonsager;
using RF = RationalFunction;

namespace {

  RF const& q() {
    static RF const v = RF::variable("q");
    return v;
  }

  // theta_i = a q^{d-2i} + a^-1 q^{2i-d}, typed out independently of the
  // library's helper.
  std::vector<RF> racah_thetas(RF const& a, int d) {
    std::vector<RF> out;
    for (int i = 0; i <= d; ++i) {
      out.push_back(a * q().pow(d - 2 * i) + a.inverse() * q().pow(2 * i - d));
    }
    return out;
  }

  // A non-diagonal matrix with the given spectrum: S diag S^-1 with S
  // unipotent upper triangular (all ones above the diagonal).
  Matrix with_spectrum(std::vector<RF> const& th) {
    std::size_t const n = th.size();
    Matrix            s = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        s(i, j) = RF(1);
      }
    }
    return s * Matrix::diagonal(th) * inverse(s);
  }

  RF P(RF const& x, RF const& y) {
    RF c = q().pow(2) - q().pow(-2);
    return x * x - (q().pow(2) + q().pow(-2)) * x * y + y * y + c * c;
  }

  Representation scalar_a1_rep() {
    std::map<Gen, Matrix> img;
    img[Gen::A1] = Matrix::identity(2).scaled(RF(3));
    img[Gen::A2] = Matrix::parse_rows({{"1", "q"}, {"0", "2"}});
    img[Gen::A3] = Matrix::parse_rows({{"0", "1"}, {"1", "0"}});
    img[Gen::B1] = Matrix::parse_rows({{"x", "0"}, {"1", "1"}});
    img[Gen::B2] = Matrix::parse_rows({{"1", "2"}, {"3", "4"}});
    img[Gen::B3] = Matrix::parse_rows({{"0", "0"}, {"q", "1/q"}});
    return Representation::from_images(img);
  }

}  // namespace

TEST(Idempotents, DiagonalMatrix) {
  RF     t0 = RF::variable("t0"), t1 = RF::variable("t1");
  auto   es = primitive_idempotents(Matrix::diagonal({t0, t1}), {t0, t1});
  EXPECT_EQ(es.idempotents[0], Matrix::parse_rows({{"1", "0"}, {"0", "0"}}));
  EXPECT_EQ(es.idempotents[1], Matrix::parse_rows({{"0", "0"}, {"0", "1"}}));
}

TEST(Idempotents, SystemIdentitiesHold) {
  RF a = RF::variable("a");
  for (int d = 1; d <= 3; ++d) {
    auto   th = racah_thetas(a, d);
    Matrix m  = with_spectrum(th);
    auto   es = primitive_idempotents(m, th);
    Matrix sum(m.dim()), recon(m.dim());
    for (std::size_t i = 0; i < th.size(); ++i) {
      sum   = sum + es.idempotents[i];
      recon = recon + th[i] * es.idempotents[i];
      for (std::size_t j = 0; j < th.size(); ++j) {
        Matrix want = i == j ? es.idempotents[i] : Matrix(m.dim());
        EXPECT_EQ(es.idempotents[i] * es.idempotents[j], want);
      }
      EXPECT_EQ(m * es.idempotents[i], th[i] * es.idempotents[i]);
    }
    EXPECT_EQ(sum, Matrix::identity(m.dim()));
    EXPECT_EQ(recon, m);
  }
}

TEST(Idempotents, WrongSpectrumRejected) {
  RF     t0 = RF::variable("t0"), t1 = RF::variable("t1");
  Matrix m  = Matrix::diagonal({t0, t1});
  EXPECT_THROW(primitive_idempotents(m, {t0, t0 + 1}), NotDiagonalizableError);
  EXPECT_THROW(primitive_idempotents(m, {t0, t0}), NotDiagonalizableError);
  EXPECT_THROW(primitive_idempotents(Matrix::parse_rows({{"1", "1"}, {"0", "1"}}),
                                     {RF(1)}),
               NotDiagonalizableError);
  // A superfluous eigenvalue gives a zero idempotent.
  EXPECT_THROW(primitive_idempotents(m, {t0, t1, RF(7)}), NotDiagonalizableError);
}

TEST(Diagram, PIsSymmetric) {
  RF x = RF::variable("x"), y = RF::variable("y");
  EXPECT_EQ(diagram_polynomial(x, y), diagram_polynomial(y, x));
  EXPECT_EQ(diagram_polynomial(x, y), P(x, y));
}

TEST(Diagram, Examples) {
  RF   a = RF::variable("a");
  auto g = build_diagram(racah_thetas(a, 1));
  ASSERT_EQ(g.edges.size(), 1U);
  EXPECT_EQ(g.shape, DiagramShape::Path);

  RF theta = RF::variable("theta");
  auto none = build_diagram({theta, theta + 1});
  EXPECT_TRUE(none.edges.empty());
  EXPECT_EQ(none.shape, DiagramShape::Disconnected);
  EXPECT_THROW(none.path_order(), NotQRacahPathError);

  auto one = build_diagram({theta});
  EXPECT_TRUE(one.edges.empty());
  EXPECT_EQ(one.shape, DiagramShape::Path);
}

TEST(Diagram, RacahSequenceIsAPathInAnyOrder) {
  RF a = RF::variable("a");
  for (int d = 1; d <= 5; ++d) {
    auto th = racah_thetas(a, d);
    // Shuffle deterministically: odd indices first.
    std::vector<RF> shuffled;
    for (int i = 1; i <= d; i += 2) shuffled.push_back(th[i]);
    for (int i = 0; i <= d; i += 2) shuffled.push_back(th[i]);
    auto g = build_diagram(shuffled);
    EXPECT_EQ(g.shape, DiagramShape::Path) << d;
    EXPECT_EQ(g.max_degree, d == 1 ? 1U : 2U);
    auto            order = g.path_order();
    std::vector<RF> walked;
    for (auto k : order) walked.push_back(shuffled[k]);
    std::vector<RF> rev(th.rbegin(), th.rend());
    EXPECT_TRUE(walked == th || walked == rev) << d;
  }
}

TEST(FormulaIdentities, RecurrenceTiFactIjkForSmallD) {
  RF a = RF::variable("a");
  RF s = q().pow(2) + q().pow(-2);
  for (int d = 1; d <= 5; ++d) {
    auto            th = racah_thetas(a, d);
    std::vector<RF> t;
    for (int i = 0; i <= d; ++i) {
      t.push_back(a.pow(2 * i - d) * q().pow(2 * i * (d - i)));
      EXPECT_EQ(qracah_eigenvalue(a, d, i), th[i]);
      EXPECT_EQ(path_weight(a, d, i), t[i]);
    }
    for (int i = 1; i < d; ++i) {
      EXPECT_TRUE((th[i - 1] - s * th[i] + th[i + 1]).is_zero()) << d << " " << i;
    }
    for (int i = 0; i < d; ++i) {
      EXPECT_TRUE(P(th[i], th[i + 1]).is_zero());
      EXPECT_EQ(t[i + 1] / t[i], tifact_rhs(th[i], th[i + 1]));
      EXPECT_EQ(t[i] / t[i + 1], tifact_rhs(th[i + 1], th[i]));
    }
  }
}

TEST(FitPath, RecoversParameterAndRegenerates) {
  RF a = RF::variable("a");
  for (int d = 1; d <= 5; ++d) {
    auto th = racah_thetas(a, d);
    RF   u  = fit_path_parameter(th);
    EXPECT_EQ(u, a);
    for (int i = 0; i <= d; ++i) {
      EXPECT_EQ(qracah_eigenvalue(u, d, i), th[i]);
    }
    std::vector<RF> rev(th.rbegin(), th.rend());
    EXPECT_EQ(fit_path_parameter(rev), a.inverse());
  }
}

TEST(FitPath, Rejections) {
  RF t0 = RF::variable("t0"), t1 = RF::variable("t1");
  try {
    fit_path_parameter({t0, t1});
    FAIL() << "expected NotQRacahPathError";
  } catch (NotQRacahPathError const& e) {
    EXPECT_EQ(e.index(), 1U);
  }
  EXPECT_THROW(fit_path_parameter(racah_thetas(RF(1), 1)), NotQRacahPathError);
  EXPECT_THROW(fit_path_parameter(racah_thetas(RF(-1), 1)), NotQRacahPathError);
  // a^2 = q^2 is excluded for d = 2.
  EXPECT_THROW(fit_path_parameter(racah_thetas(q(), 2)), NotQRacahPathError);
  // Recurrence breaks at vertex 1.
  RF   a  = RF::variable("a");
  auto th = racah_thetas(a, 2);
  th[2]   = th[2] + 1;
  EXPECT_THROW(fit_path_parameter(th), NotQRacahPathError);
}

TEST(Intertwiner, OrientationInvariance) {
  RF a = RF::variable("a");
  for (int d = 1; d <= 5; ++d) {
    auto            th = racah_thetas(a, d);
    Matrix          m  = with_spectrum(th);
    std::vector<RF> rev(th.rbegin(), th.rend());
    auto fwd  = intertwiner_from_spectrum(m, th);
    auto back = intertwiner_from_spectrum(m, rev);
    EXPECT_EQ(*fwd.a, a);
    EXPECT_EQ(*back.a, a.inverse());
    EXPECT_EQ(fwd.psi, back.psi) << d;
    EXPECT_EQ(fwd.psi * fwd.psi_inv, Matrix::identity(m.dim()));
  }
}

TEST(Intertwiner, ScalarImageGivesIdentity) {
  auto data = intertwiner_pipeline(scalar_a1_rep(), AutGenerator::L(1));
  EXPECT_TRUE(data.scalar);
  EXPECT_EQ(data.psi, Matrix::identity(2));
  for (auto const& [x, ok] : data.conjugation) {
    EXPECT_TRUE(ok) << gen_name(x);
  }
  EXPECT_EQ(data.conjugation.size(), 6U);
}

TEST(Intertwiner, StageErrors) {
  RF a = RF::variable("a"), x = RF::variable("x");
  auto th = racah_thetas(a, 2);

  Matrix bad = with_spectrum({th[0], th[1], x});
  try {
    intertwiner_from_spectrum(bad, std::vector<RF>{th[0], th[1], x});
    FAIL() << "expected PipelineError";
  } catch (PipelineError const& e) {
    EXPECT_EQ(e.stage(), "diagram");
    EXPECT_EQ(e.cause(), "NotQRacahPathError");
  }
  try {
    intertwiner_from_spectrum(with_spectrum(th), std::vector<RF>{th[0], th[1], x});
    FAIL() << "expected PipelineError";
  } catch (PipelineError const& e) {
    EXPECT_EQ(e.stage(), "idempotents");
    EXPECT_EQ(e.cause(), "NotDiagonalizableError");
  }
  try {
    intertwiner_from_spectrum(Matrix::parse_rows({{"1", "1"}, {"1", "q"}}));
    FAIL() << "expected PipelineError";
  } catch (PipelineError const& e) {
    EXPECT_EQ(e.stage(), "eigenvalues");
  }
  EXPECT_THROW(intertwiner_pipeline(scalar_a1_rep(), AutGenerator::Linv(1)), Error);
}

TEST(Representation, ProbabilisticRelationCheckAgreesWithExact) {
  // Scalar images satisfy every commutation relation.
  std::map<Gen, Matrix> img;
  for (Gen g : kStandardGens) {
    img[g] = Matrix::identity(2).scaled(RF::variable("x"));
  }
  auto rep = Representation::from_images(img);
  auto rels = relation_set(AlgebraKind::bbOq);
  for (auto const& o : verify_relations(rep, rels, ProbabilisticEquality{9, 3})) {
    if (o.clause == "bbO(i)" || o.clause == "bbO(ii)") {
      EXPECT_TRUE(o.passed) << o.name;
    }
  }
  auto exact = verify_relations(rep, rels);
  auto prob  = verify_relations(rep, rels, ProbabilisticEquality{9, 3});
  ASSERT_EQ(exact.size(), prob.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    EXPECT_EQ(exact[k].passed, prob[k].passed) << exact[k].name;
  }
}

TEST(Representation, SpecializedPointAppliesToCoefficients) {
  std::map<Gen, Matrix> img{{Gen::A, Matrix::identity(1)}, {Gen::B, Matrix::identity(1)}};
  EvaluationPoint pt;
  pt.set("q", mpq_class(3));
  auto rep = Representation::from_images(img, pt);
  NCPolynomial x = NCPolynomial::monomial({Gen::A}, q());
  EXPECT_EQ(rep.image_of(x), Matrix::identity(1).scaled(RF(3)));
  EXPECT_EQ(rep.q(), RF(3));
}
