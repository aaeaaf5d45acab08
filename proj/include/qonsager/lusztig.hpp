#pragma once

// Lusztig automorphisms of O_q and bbO_q as generator-image tables, the D6
// hexagon symmetries, and substitution-only identities between them.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qonsager/free_algebra.hpp"

namespace qonsager {

  enum class AutKind { L, Linv, Lstar, Lstar_inv };

  // index 0 selects the O_q automorphisms L, L*; 1..3 select L_i, L*_i.
  struct AutGenerator {
    AutKind kind  = AutKind::L;
    int     index = 0;

    static AutGenerator L(int i = 0) {
      return {AutKind::L, i};
    }
    static AutGenerator Linv(int i = 0) {
      return {AutKind::Linv, i};
    }
    static AutGenerator Lstar(int i = 0) {
      return {AutKind::Lstar, i};
    }
    static AutGenerator Lstar_inv(int i = 0) {
      return {AutKind::Lstar_inv, i};
    }

    bool         is_starred() const noexcept {
      return kind == AutKind::Lstar || kind == AutKind::Lstar_inv;
    }
    bool         is_inverse() const noexcept {
      return kind == AutKind::Linv || kind == AutKind::Lstar_inv;
    }
    AutGenerator inverse() const;

    // "L1", "L1^-1", "L2*", "L2*^-1", "L", "L*^-1", ...
    std::string         to_string() const;
    static AutGenerator parse(std::string_view text);

    friend bool operator==(AutGenerator const&, AutGenerator const&) = default;
  };

  using AutomorphismWord = std::vector<AutGenerator>;
  using ImageTable       = GenMap;

  std::string      word_to_string(AutomorphismWord const& w);
  AutomorphismWord parse_word(std::string_view text);

  // (q^e f^2 x - (q + q^-1) f x f + q^-e x f^2) / ((q - q^-1)(q^2 - q^-2))
  // with e = 1, or e = -1 for the inverse automorphism.
  NCPolynomial lusztig_correction(NCPolynomial const& f,
                                  NCPolynomial const& x,
                                  bool                inverse);

  ImageTable generator_image(AutGenerator g);

  using TableProvider = std::function<ImageTable(AutGenerator)>;

  // Rightmost letter acts first.
  NCPolynomial apply_word(AutomorphismWord const& w,
                          NCPolynomial const&     x,
                          TableProvider const&    tables = generator_image);

  // A -> A_i, B -> B_j.
  GenMap sigma_embed(int i, int j);

  // Literal free-algebra check of sigma o L = L_i o sigma and
  // sigma o L* = L*_j o sigma on the generators A, B.
  bool injera_check(int i, int j, TableProvider const& tables = generator_image);

  // r^rotation s^reflection acting on the hexagon cycle
  // (A1, B3, A2, B1, A3, B2): position p goes to rotation + (+-p) mod 6.
  struct Dihedral {
    int  rotation   = 0;
    bool reflection = false;

    Dihedral compose(Dihedral const& h) const;  // this after h
    Dihedral inverse() const;

    friend bool operator==(Dihedral const& x, Dihedral const& y) {
      return x.reflection == y.reflection
             && ((x.rotation - y.rotation) % 6 + 6) % 6 == 0;
    }
  };

  inline constexpr Gen kHexagonCycle[6]
      = {Gen::A1, Gen::B3, Gen::A2, Gen::B1, Gen::A3, Gen::B2};

  std::vector<Dihedral> dihedral_group();
  Gen                   dihedral_act(Dihedral const& g, Gen x);
  ImageTable            dihedral_image(Dihedral const& g);

  // Freely reduced words over {x, x^-1, y, y^-1} of length <= max_len, by
  // length and then letter order x, x^-1, y, y^-1.
  std::vector<AutomorphismWord> reduced_words(AutGenerator x,
                                              AutGenerator y,
                                              int          max_len);

}  // namespace qonsager
