#pragma once

// Noncommutative polynomials over the rational-function field, the
// q-Dolan/Grady residuals, and the defining relations of O_q and bbO_q.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qonsager/errors.hpp"
#include "qonsager/rational_function.hpp"

namespace qonsager {

  // Declaration order is the serialization order.
  enum class Gen : std::uint8_t { A, B, A1, A2, A3, B1, B2, B3 };

  inline constexpr Gen kOqGens[] = {Gen::A, Gen::B};
  inline constexpr Gen kStandardGens[]
      = {Gen::A1, Gen::A2, Gen::A3, Gen::B1, Gen::B2, Gen::B3};

  std::string_view   gen_name(Gen g);
  std::optional<Gen> parse_gen(std::string_view name);
  // A_i and B_i for i in 1..3.
  Gen gen_a(int i);
  Gen gen_b(int i);

  using Word = std::vector<Gen>;

  struct WordLess {
    bool operator()(Word const& x, Word const& y) const {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return x < y;
    }
  };

  class NCPolynomial {
   public:
    using TermMap = std::map<Word, RationalFunction, WordLess>;

    NCPolynomial() = default;
    NCPolynomial(long c);  // NOLINT(runtime/explicit)
    explicit NCPolynomial(RationalFunction const& c);
    NCPolynomial(Gen g);  // NOLINT(runtime/explicit)

    static NCPolynomial monomial(Word w, RationalFunction c = 1);

    bool           is_zero() const noexcept {
      return terms_.empty();
    }
    std::size_t    size() const noexcept {
      return terms_.size();
    }
    TermMap const& terms() const noexcept {
      return terms_;
    }
    RationalFunction coefficient(Word const& w) const;
    std::size_t      max_word_length() const;

    NCPolynomial  operator-() const;
    NCPolynomial  operator+(NCPolynomial const& y) const;
    NCPolynomial  operator-(NCPolynomial const& y) const;
    NCPolynomial  operator*(NCPolynomial const& y) const;
    NCPolynomial& operator+=(NCPolynomial const& y);
    NCPolynomial& operator-=(NCPolynomial const& y);
    NCPolynomial  scaled(RationalFunction const& c) const;

    // Applies f to every coefficient; terms whose image is zero vanish.
    NCPolynomial map_coefficients(
        std::function<RationalFunction(RationalFunction const&)> const& f)
        const;
    // Renames letters without touching coefficients.
    NCPolynomial rename(std::function<Gen(Gen)> const& f) const;

    friend bool operator==(NCPolynomial const& x, NCPolynomial const& y) {
      return x.terms_ == y.terms_;
    }
    friend bool operator!=(NCPolynomial const& x, NCPolynomial const& y) {
      return !(x == y);
    }

    std::string to_string() const;

   private:
    void add_term(Word const& w, RationalFunction const& c);

    TermMap terms_;
  };

  inline NCPolynomial operator*(RationalFunction const& c,
                                NCPolynomial const&     x) {
    return x.scaled(c);
  }

  NCPolynomial commutator(NCPolynomial const& x, NCPolynomial const& y);

  // x^3 y - [3] x^2 y x + [3] x y x^2 - y x^3 - (q^2 - q^-2)^2 (y x - x y)
  NCPolynomial qdg_residual(NCPolynomial const& x, NCPolynomial const& y);

  enum class AlgebraKind { Oq, bbOq };

  struct Relation {
    std::string  name;    // e.g. "comm(A1,A2)", "qdg(A1,B2)"
    std::string  clause;  // "Oq", "bbO(i)", "bbO(ii)", "bbO(iii)"
    NCPolynomial residual;
  };
  using RelationSet = std::vector<Relation>;

  RelationSet relation_set(AlgebraKind kind);

  // Homomorphic extension of a generator assignment.  `identity` is the unit
  // of the target algebra; T needs +, * and RationalFunction * T.  Products
  // are memoized along word prefixes, which the length-lex order visits
  // before their extensions.
  template <class T>
  T substitute(NCPolynomial const&       x,
               std::map<Gen, T> const&   images,
               T const&                  identity) {
    std::map<Word, T, WordLess> prefix;
    std::optional<T>            acc;
    for (auto const& [w, c] : x.terms()) {
      T const* value = &identity;
      if (!w.empty()) {
        auto it = prefix.find(w);
        if (it == prefix.end()) {
          T    cur  = identity;
          Word head = {};
          for (Gen g : w) {
            head.push_back(g);
            auto hit = prefix.find(head);
            if (hit != prefix.end()) {
              cur = hit->second;
              continue;
            }
            auto img = images.find(g);
            if (img == images.end()) {
              throw Error("substitute: no image for generator "
                          + std::string(gen_name(g)));
            }
            cur = head.size() == 1 ? img->second : cur * img->second;
            prefix.emplace(head, cur);
          }
          it = prefix.find(w);
        }
        value = &it->second;
      }
      T term = c.is_one() ? *value : c * *value;
      if (acc) {
        *acc = *acc + term;
      } else {
        acc = std::move(term);
      }
    }
    return acc ? *acc : RationalFunction(0) * identity;
  }

  using GenMap = std::map<Gen, NCPolynomial>;

  NCPolynomial substitute(NCPolynomial const& x, GenMap const& images);

}  // namespace qonsager
