#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qonsager {

  inline constexpr std::size_t kMaxVariables = 16;

  using VarIndex = std::uint8_t;
  using VarMask  = std::uint32_t;

  // Process-wide, append-only registry of commuting indeterminates.  The
  // first eight slots are fixed to q, a1, a2, a3, b1, b2, b3, n; the
  // registration order is the variable order used by graded-lex comparison.
  class Alphabet {
   public:
    static VarIndex                   index(std::string_view name);
    static std::optional<VarIndex>    find(std::string_view name);
    static std::string                name(VarIndex v);
    static std::size_t                size();
    static std::vector<std::string>   names();
  };

  class Monomial {
   public:
    Monomial() = default;

    static Monomial variable(VarIndex v, unsigned exponent = 1);

    unsigned exponent(VarIndex v) const noexcept {
      return exp_[v];
    }
    unsigned degree() const noexcept {
      return deg_;
    }
    bool is_one() const noexcept {
      return deg_ == 0;
    }
    VarMask mask() const noexcept;

    void set_exponent(VarIndex v, unsigned e);

    Monomial operator*(Monomial const& other) const;
    bool     divides(Monomial const& other) const noexcept;
    // Requires divisor.divides(*this).
    Monomial operator/(Monomial const& divisor) const;

    static Monomial gcd(Monomial const& x, Monomial const& y);
    static Monomial lcm(Monomial const& x, Monomial const& y);

    // Keeps only the exponents of variables in `keep`.
    Monomial restrict(VarMask keep) const;

    friend bool operator==(Monomial const& x, Monomial const& y) noexcept {
      return x.exp_ == y.exp_;
    }
    // Graded lexicographic, q > a1 > ... in alphabet order.
    friend std::strong_ordering operator<=>(Monomial const& x,
                                            Monomial const& y) noexcept;

    std::size_t hash() const noexcept;
    std::string to_string() const;

   private:
    std::array<std::uint16_t, kMaxVariables> exp_{};
    std::uint32_t                            deg_ = 0;
  };

  struct Term {
    Monomial  mono;
    mpq_class coeff;
  };

  struct EvaluationPoint;

  class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT(runtime/explicit)
    explicit Polynomial(mpq_class const& c);
    Polynomial(mpq_class const& c, Monomial const& m);

    static Polynomial variable(std::string_view name);
    static Polynomial variable(VarIndex v);
    // Sorts and combines arbitrary terms into canonical form.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept {
      return terms_.empty();
    }
    bool is_constant() const noexcept {
      return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    bool is_monomial() const noexcept {
      return terms_.size() == 1;
    }
    bool is_one() const;
    mpq_class constant_value() const;

    std::size_t size() const noexcept {
      return terms_.size();
    }
    std::vector<Term> const& terms() const noexcept {
      return terms_;
    }
    // Terms are stored in strictly decreasing graded-lex order.
    Term const& leading() const {
      return terms_.front();
    }

    VarMask  variables() const noexcept;
    unsigned degree(VarIndex v) const noexcept;
    unsigned total_degree() const noexcept;
    // Greatest monomial dividing every term.
    Monomial monomial_content() const;

    Polynomial operator-() const;
    Polynomial operator+(Polynomial const& other) const;
    Polynomial operator-(Polynomial const& other) const;
    Polynomial operator*(Polynomial const& other) const;
    Polynomial& operator+=(Polynomial const& other);
    Polynomial& operator-=(Polynomial const& other);
    Polynomial& operator*=(Polynomial const& other);

    Polynomial scaled(mpq_class const& c) const;
    Polynomial shifted(Monomial const& m) const;
    Polynomial pow(unsigned e) const;

    // Quotient when `divisor` divides *this exactly, nullopt otherwise.
    std::optional<Polynomial> divide_exact(Polynomial const& divisor) const;

    // Coefficients with respect to `v`, indexed by the exponent of v.
    std::vector<Polynomial> coefficients_in(VarIndex v) const;
    static Polynomial from_coefficients(std::vector<Polynomial> const& coeffs,
                                        VarIndex                       v);

    mpq_class evaluate(EvaluationPoint const& pt) const;
    // Integer-coefficient primitive associate with positive leading
    // coefficient, together with the factor f such that *this = f * result.
    std::pair<mpq_class, Polynomial> primitive() const;

    friend bool operator==(Polynomial const& x, Polynomial const& y);
    friend bool operator!=(Polynomial const& x, Polynomial const& y) {
      return !(x == y);
    }

    std::string to_string() const;

   private:
    std::vector<Term> terms_;
  };

  // Greatest common divisor in Q[x_1..x_k], normalized to the primitive
  // integer associate with positive leading coefficient (1 if coprime).
  Polynomial gcd(Polynomial const& x, Polynomial const& y);

  // Content of the coefficients' integers: gcd of all numerators as an
  // integer, lcm of denominators; exposes the integer structure.
  mpz_class integer_content(Polynomial const& p);

}  // namespace qonsager
