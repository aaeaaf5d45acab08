#include "qonsager/lusztig.hpp"

#include <sstream>

namespace qonsager {

  AutGenerator AutGenerator::inverse() const {
    switch (kind) {
      case AutKind::L:
        return {AutKind::Linv, index};
      case AutKind::Linv:
        return {AutKind::L, index};
      case AutKind::Lstar:
        return {AutKind::Lstar_inv, index};
      case AutKind::Lstar_inv:
        break;
    }
    return {AutKind::Lstar, index};
  }

  std::string AutGenerator::to_string() const {
    std::string s = "L";
    if (index != 0) {
      s += std::to_string(index);
    }
    if (is_starred()) {
      s += "*";
    }
    if (is_inverse()) {
      s += "^-1";
    }
    return s;
  }

  AutGenerator AutGenerator::parse(std::string_view text) {
    std::string_view t = text;
    auto             fail = [&] {
      throw ParseError("bad automorphism letter '" + std::string(text) + "'");
    };
    if (t.empty() || t.front() != 'L') {
      fail();
    }
    t.remove_prefix(1);
    AutGenerator g;
    if (!t.empty() && t.front() >= '1' && t.front() <= '3') {
      g.index = t.front() - '0';
      t.remove_prefix(1);
    }
    bool star = false, inv = false;
    if (!t.empty() && t.front() == '*') {
      star = true;
      t.remove_prefix(1);
    }
    if (t == "^-1") {
      inv = true;
      t   = {};
    }
    if (!t.empty()) {
      fail();
    }
    g.kind = star ? (inv ? AutKind::Lstar_inv : AutKind::Lstar)
                  : (inv ? AutKind::Linv : AutKind::L);
    return g;
  }

  std::string word_to_string(AutomorphismWord const& w) {
    if (w.empty()) {
      return "id";
    }
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      s += (k ? " " : "") + w[k].to_string();
    }
    return s;
  }

  AutomorphismWord parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        tok;
    AutomorphismWord   w;
    while (in >> tok) {
      if (tok == "id") {
        continue;
      }
      w.push_back(AutGenerator::parse(tok));
    }
    return w;
  }

  NCPolynomial lusztig_correction(NCPolynomial const& f,
                                  NCPolynomial const& x,
                                  bool                inverse) {
    RationalFunction const& q     = q_symbol();
    RationalFunction        qi    = q.inverse();
    RationalFunction        left  = inverse ? qi : q;
    RationalFunction        right = inverse ? q : qi;
    RationalFunction        den   = (q - qi) * (q.pow(2) - q.pow(-2));
    NCPolynomial            f2    = f * f;
    NCPolynomial num = left * (f2 * x) - (q + qi) * (f * x * f) + right * (x * f2);
    return num.scaled(den.inverse());
  }

  ImageTable generator_image(AutGenerator g) {
    ImageTable t;
    bool const inv = g.is_inverse();
    if (g.index == 0) {
      t[Gen::A] = Gen::A;
      t[Gen::B] = Gen::B;
      if (g.is_starred()) {
        t[Gen::A] += lusztig_correction(Gen::B, Gen::A, inv);
      } else {
        t[Gen::B] += lusztig_correction(Gen::A, Gen::B, inv);
      }
      return t;
    }
    int const i = g.index;
    if (i < 1 || i > 3) {
      throw Error("automorphism index must be 0..3");
    }
    for (Gen x : kStandardGens) {
      t[x] = x;
    }
    for (int j = 1; j <= 3; ++j) {
      if (j == i) {
        continue;
      }
      if (g.is_starred()) {
        t[gen_a(j)] += lusztig_correction(gen_b(i), gen_a(j), inv);
      } else {
        t[gen_b(j)] += lusztig_correction(gen_a(i), gen_b(j), inv);
      }
    }
    return t;
  }

  NCPolynomial apply_word(AutomorphismWord const& w,
                          NCPolynomial const&     x,
                          TableProvider const&    tables) {
    NCPolynomial y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      y = substitute(y, tables(*it));
    }
    return y;
  }

  GenMap sigma_embed(int i, int j) {
    if (i == j) {
      throw Error("sigma_embed needs distinct indices");
    }
    return {{Gen::A, gen_a(i)}, {Gen::B, gen_b(j)}};
  }

  bool injera_check(int i, int j, TableProvider const& tables) {
    GenMap const sigma = sigma_embed(i, j);
    auto         chase = [&](AutGenerator small, AutGenerator big) {
      ImageTable const s = tables(small);
      ImageTable const b = tables(big);
      for (Gen x : kOqGens) {
        NCPolynomial lhs = substitute(s.at(x), sigma);
        NCPolynomial rhs = substitute(sigma.at(x), b);
        if (lhs != rhs) {
          return false;
        }
      }
      return true;
    };
    return chase(AutGenerator::L(), AutGenerator::L(i))
           && chase(AutGenerator::Lstar(), AutGenerator::Lstar(j));
  }

  namespace {
    int mod6(int x) {
      return ((x % 6) + 6) % 6;
    }
  }  // namespace

  Dihedral Dihedral::compose(Dihedral const& h) const {
    return {mod6(rotation + (reflection ? -h.rotation : h.rotation)),
            reflection != h.reflection};
  }

  Dihedral Dihedral::inverse() const {
    // Reflections are involutions; rotations invert.
    return reflection ? *this : Dihedral{mod6(-rotation), false};
  }

  std::vector<Dihedral> dihedral_group() {
    std::vector<Dihedral> g;
    for (int e = 0; e < 2; ++e) {
      for (int k = 0; k < 6; ++k) {
        g.push_back({k, e == 1});
      }
    }
    return g;
  }

  Gen dihedral_act(Dihedral const& g, Gen x) {
    for (int p = 0; p < 6; ++p) {
      if (kHexagonCycle[p] == x) {
        return kHexagonCycle[mod6(g.rotation + (g.reflection ? -p : p))];
      }
    }
    throw Error("dihedral action is defined on A1..B3 only");
  }

  ImageTable dihedral_image(Dihedral const& g) {
    ImageTable t;
    for (Gen x : kStandardGens) {
      t[x] = dihedral_act(g, x);
    }
    return t;
  }

  std::vector<AutomorphismWord> reduced_words(AutGenerator x,
                                              AutGenerator y,
                                              int          max_len) {
    AutGenerator const            letters[4] = {x, x.inverse(), y, y.inverse()};
    std::vector<AutomorphismWord> out{{}};
    std::size_t                   level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
      std::size_t const level_end = out.size();
      for (std::size_t k = level_begin; k < level_end; ++k) {
        for (AutGenerator const& g : letters) {
          AutomorphismWord const& w = out[k];
          if (!w.empty() && w.back() == g.inverse()) {
            continue;
          }
          AutomorphismWord v = w;
          v.push_back(g);
          out.push_back(std::move(v));
        }
      }
      level_begin = level_end;
    }
    return out;
  }

}  // namespace qonsager
