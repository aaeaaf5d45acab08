#include "qonsager/free_algebra.hpp"

#include <algorithm>
#include <array>

namespace qonsager {

  namespace {
    constexpr std::array<std::string_view, 8> kNames
        = {"A", "B", "A1", "A2", "A3", "B1", "B2", "B3"};
  }

  std::string_view gen_name(Gen g) {
    return kNames[static_cast<std::size_t>(g)];
  }

  std::optional<Gen> parse_gen(std::string_view name) {
    for (std::size_t k = 0; k < kNames.size(); ++k) {
      if (kNames[k] == name) {
        return static_cast<Gen>(k);
      }
    }
    return std::nullopt;
  }

  Gen gen_a(int i) {
    if (i < 1 || i > 3) {
      throw Error("generator index must be 1, 2 or 3");
    }
    return static_cast<Gen>(static_cast<int>(Gen::A1) + i - 1);
  }

  Gen gen_b(int i) {
    if (i < 1 || i > 3) {
      throw Error("generator index must be 1, 2 or 3");
    }
    return static_cast<Gen>(static_cast<int>(Gen::B1) + i - 1);
  }

  NCPolynomial::NCPolynomial(long c) : NCPolynomial(RationalFunction(c)) {}

  NCPolynomial::NCPolynomial(RationalFunction const& c) {
    if (!c.is_zero()) {
      terms_.emplace(Word{}, c);
    }
  }

  NCPolynomial::NCPolynomial(Gen g) {
    terms_.emplace(Word{g}, RationalFunction(1));
  }

  NCPolynomial NCPolynomial::monomial(Word w, RationalFunction c) {
    NCPolynomial r;
    if (!c.is_zero()) {
      r.terms_.emplace(std::move(w), std::move(c));
    }
    return r;
  }

  RationalFunction NCPolynomial::coefficient(Word const& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction(0) : it->second;
  }

  std::size_t NCPolynomial::max_word_length() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
  }

  void NCPolynomial::add_term(Word const& w, RationalFunction const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial r = *this;
    for (auto& [w, c] : r.terms_) {
      c = -c;
    }
    return r;
  }

  NCPolynomial& NCPolynomial::operator+=(NCPolynomial const& y) {
    for (auto const& [w, c] : y.terms_) {
      add_term(w, c);
    }
    return *this;
  }

  NCPolynomial& NCPolynomial::operator-=(NCPolynomial const& y) {
    for (auto const& [w, c] : y.terms_) {
      add_term(w, -c);
    }
    return *this;
  }

  NCPolynomial NCPolynomial::operator+(NCPolynomial const& y) const {
    NCPolynomial r = *this;
    r += y;
    return r;
  }

  NCPolynomial NCPolynomial::operator-(NCPolynomial const& y) const {
    NCPolynomial r = *this;
    r -= y;
    return r;
  }

  NCPolynomial NCPolynomial::operator*(NCPolynomial const& y) const {
    NCPolynomial r;
    for (auto const& [u, c] : terms_) {
      for (auto const& [v, d] : y.terms_) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        r.add_term(w, c * d);
      }
    }
    return r;
  }

  NCPolynomial NCPolynomial::scaled(RationalFunction const& c) const {
    if (c.is_zero()) {
      return {};
    }
    NCPolynomial r = *this;
    for (auto& [w, k] : r.terms_) {
      k *= c;
    }
    return r;
  }

  NCPolynomial NCPolynomial::map_coefficients(
      std::function<RationalFunction(RationalFunction const&)> const& f)
      const {
    NCPolynomial r;
    for (auto const& [w, c] : terms_) {
      r.add_term(w, f(c));
    }
    return r;
  }

  NCPolynomial NCPolynomial::rename(std::function<Gen(Gen)> const& f) const {
    NCPolynomial r;
    for (auto const& [w, c] : terms_) {
      Word u(w.size());
      std::transform(w.begin(), w.end(), u.begin(), f);
      r.add_term(u, c);
    }
    return r;
  }

  std::string NCPolynomial::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [w, c] : terms_) {
      RationalFunction k   = c;
      bool             neg = false;
      if (k.numerator().leading().coeff < 0) {
        neg = true;
        k   = -k;
      }
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;

      std::string word;
      for (std::size_t i = 0; i < w.size(); ++i) {
        word += (i ? "*" : "");
        word += gen_name(w[i]);
      }
      if (w.empty()) {
        out += k.to_string();
        continue;
      }
      if (!k.is_one()) {
        std::string ks = k.to_string();
        bool        simple
            = ks.find_first_of(" /") == std::string::npos;
        out += simple ? ks : "(" + ks + ")";
        out += "*";
      }
      out += word;
    }
    return out;
  }

  NCPolynomial commutator(NCPolynomial const& x, NCPolynomial const& y) {
    return x * y - y * x;
  }

  NCPolynomial qdg_residual(NCPolynomial const& x, NCPolynomial const& y) {
    RationalFunction const& q  = q_symbol();
    RationalFunction        b3 = qbracket(3);
    RationalFunction        c  = (q.pow(2) - q.pow(-2)).pow(2);
    NCPolynomial            x2 = x * x;
    NCPolynomial            x3 = x2 * x;
    return x3 * y - b3 * (x2 * y * x) + b3 * (x * y * x2) - y * x3
           - c * (y * x - x * y);
  }

  RelationSet relation_set(AlgebraKind kind) {
    RelationSet rels;
    auto        name2 = [](char const* op, Gen g, Gen h) {
      return std::string(op) + "(" + std::string(gen_name(g)) + ","
             + std::string(gen_name(h)) + ")";
    };
    if (kind == AlgebraKind::Oq) {
      rels.push_back({"qdg(A,B)", "Oq", qdg_residual(Gen::A, Gen::B)});
      rels.push_back({"qdg(B,A)", "Oq", qdg_residual(Gen::B, Gen::A)});
      return rels;
    }
    int const pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto family : {gen_a, gen_b}) {
      for (auto const& p : pairs) {
        Gen g = family(p[0]), h = family(p[1]);
        rels.push_back({name2("comm", g, h), "bbO(i)", commutator(g, h)});
      }
    }
    for (int i = 1; i <= 3; ++i) {
      Gen g = gen_a(i), h = gen_b(i);
      rels.push_back({name2("comm", g, h), "bbO(ii)", commutator(g, h)});
    }
    int const ordered[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    for (auto const& p : ordered) {
      Gen a = gen_a(p[0]), b = gen_b(p[1]);
      rels.push_back({name2("qdg", a, b), "bbO(iii)", qdg_residual(a, b)});
      rels.push_back({name2("qdg", b, a), "bbO(iii)", qdg_residual(b, a)});
    }
    return rels;
  }

  NCPolynomial substitute(NCPolynomial const& x, GenMap const& images) {
    // Unassigned letters are fixed.
    GenMap full = images;
    for (auto const& [w, c] : x.terms()) {
      for (Gen g : w) {
        full.emplace(g, NCPolynomial(g));
      }
    }
    return substitute<NCPolynomial>(x, full, NCPolynomial(1));
  }

}  // namespace qonsager
