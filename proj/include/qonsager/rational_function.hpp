#pragma once

// Exact arithmetic in the field of multivariate rational functions over Q.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "qonsager/polynomial.hpp"

namespace qonsager {

  // Assignment of exact rational values to named indeterminates.
  struct EvaluationPoint {
    std::map<std::string, mpq_class> assignments;

    EvaluationPoint& set(std::string const& name, mpq_class value) {
      assignments[name] = std::move(value);
      return *this;
    }
    bool has(std::string const& name) const {
      return assignments.count(name) != 0;
    }
    mpq_class const& at(std::string const& name) const;
  };

  // Invariant: numerator and denominator have integer coefficients, no common
  // polynomial factor, no common integer content, and the denominator's
  // graded-lex leading coefficient is positive.  The canonical form is
  // therefore unique, and equal field elements serialize identically.
  class RationalFunction {
   public:
    RationalFunction();
    RationalFunction(long c);  // NOLINT(runtime/explicit)
    explicit RationalFunction(mpq_class const& c);
    explicit RationalFunction(Polynomial const& p);

    static RationalFunction variable(std::string_view name);
    static RationalFunction fraction(Polynomial num, Polynomial den);
    // Parses the canonical text form (and ordinary +,-,*,/,^ expressions).
    static RationalFunction parse(std::string_view text);

    Polynomial const& numerator() const noexcept {
      return num_;
    }
    Polynomial const& denominator() const noexcept {
      return den_;
    }

    bool is_zero() const noexcept {
      return num_.is_zero();
    }
    bool is_one() const;
    bool is_constant() const noexcept {
      return num_.is_constant() && den_.is_constant();
    }
    mpq_class constant_value() const;
    VarMask   variables() const noexcept {
      return num_.variables() | den_.variables();
    }

    RationalFunction operator-() const;
    RationalFunction operator+(RationalFunction const& g) const;
    RationalFunction operator-(RationalFunction const& g) const;
    RationalFunction operator*(RationalFunction const& g) const;
    RationalFunction operator/(RationalFunction const& g) const;
    RationalFunction& operator+=(RationalFunction const& g);
    RationalFunction& operator-=(RationalFunction const& g);
    RationalFunction& operator*=(RationalFunction const& g);
    RationalFunction& operator/=(RationalFunction const& g);

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    // Throws PoleError when the denominator vanishes at `pt`.
    mpq_class evaluate(EvaluationPoint const& pt) const;
    // Replaces every occurrence of `var` by `value`.
    RationalFunction substitute(std::string_view        var,
                                RationalFunction const& value) const;

    // Canonical-form comparison; agrees with cross-multiplication because
    // the representation is reduced.
    friend bool operator==(RationalFunction const& f,
                           RationalFunction const& g) {
      return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(RationalFunction const& f,
                           RationalFunction const& g) {
      return !(f == g);
    }

    std::string to_string() const;

   private:
    struct Raw {};
    RationalFunction(Raw, Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_content();

    Polynomial num_;
    Polynomial den_;
  };

  inline RationalFunction operator+(long c, RationalFunction const& f) {
    return RationalFunction(c) + f;
  }
  inline RationalFunction operator-(long c, RationalFunction const& f) {
    return RationalFunction(c) - f;
  }
  inline RationalFunction operator*(long c, RationalFunction const& f) {
    return RationalFunction(c) * f;
  }
  inline RationalFunction operator/(long c, RationalFunction const& f) {
    return RationalFunction(c) / f;
  }

  // Equality decision procedures.
  struct ExactEquality {};
  struct ProbabilisticEquality {
    std::uint64_t seed   = 0;
    unsigned      trials = 8;
  };
  using EqualityMode = std::variant<ExactEquality, ProbabilisticEquality>;

  // Exact mode tests num(f) den(g) - num(g) den(f) == 0.  Probabilistic mode
  // compares values at seeded random points avoiding poles; it can only err
  // by reporting unequal functions as equal.
  bool equals(RationalFunction const& f,
              RationalFunction const& g,
              EqualityMode const&     mode = ExactEquality{});

  // Seeded pseudo-random rationals: numerators in [-10^6, 10^6],
  // denominators in [1, 64].
  class RandomPointGenerator {
   public:
    explicit RandomPointGenerator(std::uint64_t seed);
    mpq_class       next();
    EvaluationPoint point(VarMask vars);

   private:
    std::uint64_t state_;
  };

  // (q^m - q^-m) / (q - q^-1).
  // Substitutes every assigned variable of `pt` that occurs in `f`.
  RationalFunction specialize(RationalFunction const& f, EvaluationPoint const& pt);

  RationalFunction qbracket(unsigned m);

  // Frequently used scalars.
  RationalFunction const& q_symbol();

}  // namespace qonsager
