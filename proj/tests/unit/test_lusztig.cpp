#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "qonsager/lusztig.hpp"

using namespace qonsager;
using RF = RationalFunction;

namespace {

  RF qinv_swap(RF const& c) {
    return c.substitute("q", RF::variable("q").inverse());
  }

  bool residual_in_set_up_to_sign(NCPolynomial const& r,
                                  RelationSet const&  rels) {
    return std::any_of(rels.begin(), rels.end(), [&](Relation const& s) {
      return s.residual == r || s.residual == -r;
    });
  }

}  // namespace

TEST(GeneratorImage, L1FixesAGenerators) {
  ImageTable t = generator_image(AutGenerator::L(1));
  EXPECT_EQ(t.at(Gen::A2), NCPolynomial(Gen::A2));
  EXPECT_EQ(t.at(Gen::A1), NCPolynomial(Gen::A1));
  EXPECT_EQ(t.at(Gen::B1), NCPolynomial(Gen::B1));
  EXPECT_EQ(t.size(), 6U);
}

TEST(GeneratorImage, L1OnB2MatchesDisplayedFormula) {
  // Coefficients parsed from text, independently of the engine's builder.
  RF den  = RF::parse("(q - 1/q)*(q^2 - 1/q^2)");
  RF outer = RF::parse("q") / den;
  RF mid   = RF::parse("-(q + 1/q)") / den;
  RF inner = RF::parse("1/q") / den;
  using G  = Gen;
  NCPolynomial expected = NCPolynomial(G::B2)
                          + NCPolynomial::monomial({G::A1, G::A1, G::B2}, outer)
                          + NCPolynomial::monomial({G::A1, G::B2, G::A1}, mid)
                          + NCPolynomial::monomial({G::B2, G::A1, G::A1}, inner);
  EXPECT_EQ(generator_image(AutGenerator::L(1)).at(G::B2), expected);

  NCPolynomial expected_inv
      = NCPolynomial(G::B2)
        + NCPolynomial::monomial({G::A1, G::A1, G::B2}, inner)
        + NCPolynomial::monomial({G::A1, G::B2, G::A1}, mid)
        + NCPolynomial::monomial({G::B2, G::A1, G::A1}, outer);
  EXPECT_EQ(generator_image(AutGenerator::Linv(1)).at(G::B2), expected_inv);
}

TEST(GeneratorImage, InverseTablesAreQInversions) {
  for (int i = 0; i <= 3; ++i) {
    for (auto g : {AutGenerator::L(i), AutGenerator::Lstar(i)}) {
      ImageTable fwd = generator_image(g), back = generator_image(g.inverse());
      ASSERT_EQ(fwd.size(), back.size());
      for (auto const& [x, img] : fwd) {
        EXPECT_EQ(img.map_coefficients(qinv_swap), back.at(x))
            << g.to_string() << " on " << gen_name(x);
      }
    }
  }
}

TEST(GeneratorImage, OqTables) {
  ImageTable l = generator_image(AutGenerator::L());
  EXPECT_EQ(l.at(Gen::A), NCPolynomial(Gen::A));
  EXPECT_EQ(l.at(Gen::B),
            NCPolynomial(Gen::B) + lusztig_correction(Gen::A, Gen::B, false));
  ImageTable ls = generator_image(AutGenerator::Lstar_inv());
  EXPECT_EQ(ls.at(Gen::B), NCPolynomial(Gen::B));
  EXPECT_EQ(ls.at(Gen::A).size(), 4U);
}

TEST(GeneratorImage, FixedPointLaw) {
  RelationSet rels = relation_set(AlgebraKind::bbOq);
  auto commutes = [&](Gen f, Gen x) {
    if (f == x) {
      return true;
    }
    NCPolynomial c = commutator(f, x);
    return residual_in_set_up_to_sign(c, rels);
  };
  for (int i = 1; i <= 3; ++i) {
    ImageTable l = generator_image(AutGenerator::L(i));
    ImageTable s = generator_image(AutGenerator::Lstar(i));
    int        fixed_l = 0, fixed_s = 0;
    for (Gen x : kStandardGens) {
      if (commutes(gen_a(i), x)) {
        EXPECT_EQ(l.at(x), NCPolynomial(x));
        ++fixed_l;
      } else {
        EXPECT_NE(l.at(x), NCPolynomial(x));
      }
      if (commutes(gen_b(i), x)) {
        EXPECT_EQ(s.at(x), NCPolynomial(x));
        ++fixed_s;
      }
    }
    EXPECT_EQ(fixed_l, 4);
    EXPECT_EQ(fixed_s, 4);
  }
}

TEST(ApplyWord, Basics) {
  NCPolynomial x = NCPolynomial(Gen::B2) * Gen::A3 + 5;
  EXPECT_EQ(apply_word({}, x), x);
  EXPECT_EQ(apply_word({AutGenerator::L(1)}, Gen::A3), NCPolynomial(Gen::A3));
  EXPECT_EQ(apply_word({AutGenerator::L(2), AutGenerator::L(1)}, Gen::A3),
            NCPolynomial(Gen::A3));
}

TEST(ApplyWord, RightmostActsFirst) {
  // L1* moves A2, and L2 then acts on its image; composing the other way
  // starts from L2(A2) = A2.
  AutomorphismWord w  = {AutGenerator::L(2), AutGenerator::Lstar(1)};
  NCPolynomial     lhs = apply_word(w, Gen::A2);
  NCPolynomial     inner = generator_image(AutGenerator::Lstar(1)).at(Gen::A2);
  EXPECT_EQ(lhs, substitute(inner, generator_image(AutGenerator::L(2))));
}

TEST(WordNotation, RoundTrip) {
  for (char const* s : {"L1", "L1^-1", "L2*", "L3*^-1", "L", "L*"}) {
    EXPECT_EQ(AutGenerator::parse(s).to_string(), s);
  }
  AutomorphismWord w = parse_word("L1 L2*^-1 L1");
  ASSERT_EQ(w.size(), 3U);
  EXPECT_EQ(word_to_string(w), "L1 L2*^-1 L1");
  EXPECT_THROW(AutGenerator::parse("M1"), ParseError);
  EXPECT_THROW(AutGenerator::parse("L4"), ParseError);
}

TEST(SigmaEmbed, Data) {
  GenMap s = sigma_embed(1, 2);
  EXPECT_EQ(s.at(Gen::A), NCPolynomial(Gen::A1));
  EXPECT_EQ(s.at(Gen::B), NCPolynomial(Gen::B2));
  EXPECT_EQ(substitute(NCPolynomial(Gen::A) * Gen::B, s),
            NCPolynomial(Gen::A1) * Gen::B2);
  EXPECT_EQ(substitute(NCPolynomial(1), s), NCPolynomial(1));
  EXPECT_THROW(sigma_embed(2, 2), Error);
}

TEST(Injera, AllOrderedPairs) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) {
        EXPECT_TRUE(injera_check(i, j)) << i << "," << j;
      }
    }
  }
}

TEST(Injera, CorruptedTableFails) {
  TableProvider corrupted = [](AutGenerator g) {
    ImageTable t = generator_image(g);
    if (g.index != 0 && g.kind == AutKind::L) {
      for (auto& [x, img] : t) {
        img = img.map_coefficients(qinv_swap);
      }
    }
    return t;
  };
  EXPECT_FALSE(injera_check(1, 2, corrupted));
}

TEST(Dihedral, OneStepRotation) {
  Dihedral r{1, false};
  using G = Gen;
  EXPECT_EQ(dihedral_act(r, G::A1), G::B3);
  EXPECT_EQ(dihedral_act(r, G::B3), G::A2);
  EXPECT_EQ(dihedral_act(r, G::A2), G::B1);
  EXPECT_EQ(dihedral_act(r, G::B1), G::A3);
  EXPECT_EQ(dihedral_act(r, G::A3), G::B2);
  EXPECT_EQ(dihedral_act(r, G::B2), G::A1);
  ImageTable id = dihedral_image({});
  for (Gen x : kStandardGens) {
    EXPECT_EQ(id.at(x), NCPolynomial(x));
  }
}

TEST(Dihedral, GroupLawOnImages) {
  auto group = dihedral_group();
  ASSERT_EQ(group.size(), 12U);
  for (auto const& g : group) {
    for (auto const& h : group) {
      for (Gen x : kStandardGens) {
        EXPECT_EQ(dihedral_act(g.compose(h), x),
                  dihedral_act(g, dihedral_act(h, x)));
      }
    }
    for (Gen x : kStandardGens) {
      EXPECT_EQ(dihedral_act(g.inverse(), dihedral_act(g, x)), x);
    }
  }
}

TEST(Dihedral, PreservesRelationSetUpToSign) {
  RelationSet rels = relation_set(AlgebraKind::bbOq);
  for (auto const& g : dihedral_group()) {
    auto f = [&](Gen x) { return dihedral_act(g, x); };
    for (auto const& r : rels) {
      EXPECT_TRUE(residual_in_set_up_to_sign(r.residual.rename(f), rels))
          << r.name;
    }
  }
}

TEST(ReducedWords, Counts) {
  auto x = AutGenerator::L(1), y = AutGenerator::Lstar(2);
  EXPECT_EQ(reduced_words(x, y, 0).size(), 1U);
  EXPECT_EQ(reduced_words(x, y, 1).size(), 5U);
  EXPECT_EQ(reduced_words(x, y, 2).size(), 1U + 4U + 4U * 3U);
  auto w3 = reduced_words(x, y, 3);
  EXPECT_EQ(w3.size(), 1U + 4U + 12U + 36U);
  std::set<std::string> seen;
  for (auto const& w : w3) {
    for (std::size_t k = 1; k < w.size(); ++k) {
      EXPECT_FALSE(w[k] == w[k - 1].inverse());
    }
    seen.insert(word_to_string(w));
  }
  EXPECT_EQ(seen.size(), w3.size());
}
