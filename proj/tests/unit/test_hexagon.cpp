#include <gtest/gtest.h>

#include "qonsager/errors.hpp"
#include "qonsager/hexagon.hpp"

using namespace qonsager;
using RF = RationalFunction;

namespace {

  ExampleBundle const& symbolic_bundle() {
    static ExampleBundle const b = build_example(ExampleParams::symbolic());
    return b;
  }

  void expect_all_pass(Report const& r) {
    EXPECT_FALSE(r.checks.empty());
    for (auto const& c : r.checks) {
      EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
      EXPECT_FALSE(c.anchor.empty()) << c.name;
    }
  }

  ExampleParams with(std::string const& key, mpq_class v) {
    ExampleParams p;
    p.fixed.set(key, v);
    return p;
  }

}  // namespace

TEST(Example, A1AndB2AsDisplayed) {
  std::string const hi = "a1*q + 1/(a1*q)", lo = "a1/q + q/a1",
                    off = "(a1 - 1/a1)*(q - 1/q)";
  Matrix want_a1 = Matrix::parse_rows({{hi, "0", off, off, "0"},
                                       {"0", hi, "0", "0", off},
                                       {"0", "0", lo, "0", "0"},
                                       {"0", "0", "0", lo, "0"},
                                       {"0", "0", "0", "0", lo}});
  std::string const bh = "b2*q + 1/(b2*q)", bl = "b2/q + q/b2",
                    bo = "(b2 - 1/b2)*(q - 1/q)/n";
  Matrix want_b2 = Matrix::parse_rows({{bl, "0", "0", "0", "0"},
                                       {"0", bl, "0", "0", "0"},
                                       {bo, "0", bh, "0", "0"},
                                       {"0", "0", "0", bl, "0"},
                                       {"0", bo, "0", bo, bh}});
  auto const& b = symbolic_bundle();
  EXPECT_EQ(b.A[0], want_a1);
  EXPECT_EQ(b.B[1], want_b2);
  EXPECT_EQ(b.A[0](0, 2), RF::parse(off));
  EXPECT_EQ(b.rep[Gen::A1], b.A[0]);
  EXPECT_EQ(b.rep[Gen::B3], b.B[2]);
}

TEST(Example, ParameterValidation) {
  EXPECT_THROW(build_example(with("a1", 1)), ParameterError);
  EXPECT_THROW(build_example(with("b3", -1)), ParameterError);
  EXPECT_THROW(build_example(with("n", 0)), ParameterError);
  EXPECT_THROW(build_example(with("q", 1)), ParameterError);
  EXPECT_THROW(build_example(with("z", 2)), ParameterError);
  EXPECT_NO_THROW(build_example(with("n", 3)));
}

TEST(Example, SeededParamsAreDeterministicAndValid) {
  auto p = seeded_params(42), p2 = seeded_params(42), p3 = seeded_params(43);
  EXPECT_TRUE(p.is_fully_specialized());
  EXPECT_EQ(p.describe(), p2.describe());
  EXPECT_NE(p.describe(), p3.describe());
  EXPECT_NO_THROW(p.validate());
  EvaluationPoint o;
  o.set("n", 3);
  EXPECT_EQ(seeded_params(42, o).fixed.at("n"), 3);
}

TEST(Example, ParameterFileFormat) {
  auto p = parse_params("# sample\nq = 2\na1 = 3\na2=-5/2\na3 = 7\n"
                        "b1 = 11\nb2 = 1/3\nb3 = 4\nn = 3  # trailing\n");
  EXPECT_EQ(p.fixed.at("a2"), mpq_class(-5, 2));
  EXPECT_EQ(p.fixed.at("n"), 3);
  EXPECT_THROW(parse_params("q = 2\n"), ParameterError);
  EXPECT_THROW(parse_params("q = 2\nq = 3\n"), ParameterError);
  EXPECT_THROW(parse_params("q = 2\nfoo = 3\n"), ParameterError);
  EXPECT_THROW(parse_params("q = 2/x\n"), ParseError);
  EXPECT_THROW(parse_params("q 2\n"), ParseError);
}

TEST(Example, RelationSuiteSymbolic) {
  auto r = verify_relations_report(symbolic_bundle().rep,
                                   relation_set(AlgebraKind::bbOq),
                                   ExactEquality{}, "hexagon/relations", "Proposition OQM");
  EXPECT_EQ(r.checks.size(), 21U);
  expect_all_pass(r);
}

TEST(Example, PerturbedRepresentationFails) {
  Representation rep = symbolic_bundle().rep;
  Matrix         a1  = rep[Gen::A1];
  a1(0, 0)           = a1(0, 0) + 1;
  rep.images[Gen::A1] = a1;
  auto out = verify_relations(rep, relation_set(AlgebraKind::bbOq));
  EXPECT_TRUE(std::any_of(out.begin(), out.end(),
                          [](ResidualOutcome const& o) { return !o.passed; }));
  for (auto const& o : out) {
    EXPECT_EQ(o.passed, o.detail.empty()) << o.name;
  }
}

TEST(Example, SourcePairSatisfiesQDolanGrady) {
  auto const& b = symbolic_bundle();
  auto pair = Representation::from_images({{Gen::A, b.A[0]}, {Gen::B, b.B[1]}});
  for (auto const& o : verify_relations(pair, relation_set(AlgebraKind::Oq))) {
    EXPECT_TRUE(o.passed) << o.name << " " << o.detail;
  }
}

TEST(Example, StructureConjugationsBasisIntertwiners) {
  auto const& b = symbolic_bundle();
  expect_all_pass(verify_structure(b));
  expect_all_pass(verify_conjugations(b));
  expect_all_pass(verify_basis_and_irreducibility(b, 7));
  expect_all_pass(verify_intertwiners(b));
}

TEST(Example, PrimitiveIdempotentsOfA1) {
  auto const& b   = symbolic_bundle();
  auto        th  = triangular_spectrum(b.A[0]);
  ASSERT_EQ(th.size(), 2U);
  auto es = primitive_idempotents(b.A[0], th);
  EXPECT_EQ(es.idempotents[0], b.E[0]);
  EXPECT_EQ(es.idempotents[1], Matrix::identity(5) - b.E[0]);
}

TEST(Example, IntertwinerIntermediatesForL1) {
  auto const& b    = symbolic_bundle();
  auto        data = intertwiner_pipeline(b.rep, AutGenerator::L(1));
  RF          a1 = RF::variable("a1"), q = RF::variable("q");
  ASSERT_EQ(data.thetas.size(), 2U);
  EXPECT_EQ(data.thetas[0], a1 * q + (a1 * q).inverse());
  EXPECT_EQ(*data.a, a1);
  EXPECT_EQ(data.weights[0], a1.inverse());
  EXPECT_EQ(data.weights[1], a1);
  EXPECT_EQ(data.psi, (a1.inverse() - a1) * b.E[0] + a1 * Matrix::identity(5));
}

TEST(Example, WrongEigenvaluesForA1) {
  auto const& b = symbolic_bundle();
  RF          x = RF::variable("x");
  try {
    intertwiner_pipeline(b.rep, AutGenerator::L(1), std::vector<RF>{b.A[0](0, 0), x});
    FAIL() << "expected PipelineError";
  } catch (PipelineError const& e) {
    EXPECT_EQ(e.stage(), "idempotents");
  }
}

TEST(Example, WrongPsiBreaksConjugation) {
  auto const& b    = symbolic_bundle();
  auto        data = intertwiner_pipeline(b.rep, AutGenerator::L(1));
  Matrix      bad  = data.psi + b.E[1];
  ImageTable  t    = generator_image(AutGenerator::L(1));
  EXPECT_NE(bad * b.rep.image_of(t.at(Gen::B2)), b.rep[Gen::B2] * bad);
}

TEST(Twist, LusztigAutomorphismsCommuteOnTheModule) {
  auto const& rep = symbolic_bundle().rep;
  auto        L   = AutGenerator::L;
  auto        Ls  = AutGenerator::Lstar;
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    auto lhs = twist(rep, {L(i), L(j)});
    auto rhs = twist(rep, {L(j), L(i)});
    for (Gen x : kStandardGens) {
      EXPECT_EQ(lhs[x], rhs[x]) << i << j << gen_name(x);
    }
  }
  for (int i = 1; i <= 3; ++i) {
    auto lhs = twist(rep, {L(i), Ls(i)});
    auto rhs = twist(rep, {Ls(i), L(i)});
    for (Gen x : kStandardGens) {
      EXPECT_EQ(lhs[x], rhs[x]) << i << gen_name(x);
    }
  }
}

TEST(Twist, InverseUndoesAutomorphism) {
  auto const& rep = symbolic_bundle().rep;
  for (auto g : {AutGenerator::L(2), AutGenerator::Lstar_inv(3)}) {
    auto back = twist(rep, {g, g.inverse()});
    for (Gen x : kStandardGens) {
      EXPECT_EQ(back[x], rep[x]);
    }
    EXPECT_NE(twist(rep, {g}).images, rep.images);
  }
}

TEST(Tensor, SlotAssignments) {
  auto   p  = seeded_params(1);
  auto   sb = build_example(p);
  Matrix id = Matrix::identity(5);
  auto   r1 = build_tensor_rep(sb.A[0], sb.B[1], TensorVariant::OOO, p.fixed);
  auto   r2 = build_tensor_rep(sb.A[0], sb.B[1], TensorVariant::OOO2, p.fixed);
  EXPECT_EQ(r1.dim, 125U);
  EXPECT_EQ(r1[Gen::B3], kronecker(kronecker(sb.B[1], id), id));
  EXPECT_EQ(r1[Gen::A1], kronecker(kronecker(sb.A[0], id), id));
  EXPECT_EQ(r2[Gen::B1], kronecker(kronecker(id, id), sb.B[1]));
}

TEST(Tensor, RejectsPairFailingQDolanGrady) {
  auto const& b   = symbolic_bundle();
  Matrix      bad = b.B[1];
  bad(0, 1)       = RF(1);
  EXPECT_THROW(build_tensor_rep(b.A[0], bad, TensorVariant::OOO), Error);
}
