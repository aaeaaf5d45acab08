#include "qonsager/rational_function.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

#include "qonsager/errors.hpp"

namespace qonsager {

  mpq_class const& EvaluationPoint::at(std::string const& name) const {
    auto it = assignments.find(name);
    if (it == assignments.end()) {
      throw std::invalid_argument("evaluation point has no value for '" + name
                                  + "'");
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction and normalization
  ////////////////////////////////////////////////////////////////////////

  RationalFunction::RationalFunction() : num_(), den_(1) {}

  RationalFunction::RationalFunction(long c) : num_(c), den_(1) {}

  RationalFunction::RationalFunction(mpq_class const& c)
      : num_(mpq_class(c.get_num())), den_(mpq_class(c.get_den())) {}

  RationalFunction::RationalFunction(Polynomial const& p) : num_(p), den_(1) {
    normalize_content();
  }

  RationalFunction RationalFunction::variable(std::string_view name) {
    return RationalFunction(Polynomial::variable(name));
  }

  RationalFunction RationalFunction::fraction(Polynomial num, Polynomial den) {
    if (den.is_zero()) {
      throw DivisionByZeroError();
    }
    if (num.is_zero()) {
      return RationalFunction();
    }
    if (!den.is_constant() && !num.is_constant()) {
      Polynomial g = gcd(num, den);
      if (!g.is_constant()) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
      }
    }
    RationalFunction f(Raw{}, std::move(num), std::move(den));
    f.normalize_content();
    return f;
  }

  // Scales numerator and denominator by one rational so that both have
  // integer coefficients with joint content 1 and lc(den) > 0.
  void RationalFunction::normalize_content() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (auto const* p : {&num_, &den_}) {
      for (auto const& t : p->terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coeff.get_den_mpz_t());
      }
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(den_.leading().coeff) < 0) {
      scale = -scale;
    }
    if (scale != 1) {
      num_ = num_.scaled(scale);
      den_ = den_.scaled(scale);
    }
  }

  bool RationalFunction::is_one() const {
    return num_.is_one() && den_.is_one();
  }

  mpq_class RationalFunction::constant_value() const {
    if (!is_constant()) {
      throw std::logic_error("rational function is not constant");
    }
    return num_.constant_value() / den_.constant_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Field operations
  ////////////////////////////////////////////////////////////////////////

  RationalFunction RationalFunction::operator-() const {
    return RationalFunction(Raw{}, -num_, den_);
  }

  RationalFunction RationalFunction::operator+(RationalFunction const& g) const {
    if (is_zero()) {
      return g;
    }
    if (g.is_zero()) {
      return *this;
    }
    if (is_constant() && g.is_constant()) {
      return RationalFunction(mpq_class(constant_value() + g.constant_value()));
    }
    if (den_ == g.den_) {
      Polynomial num = num_ + g.num_;
      if (num.is_zero()) {
        return RationalFunction();
      }
      if (den_.is_constant()) {
        RationalFunction r(Raw{}, std::move(num), den_);
        r.normalize_content();
        return r;
      }
      return fraction(std::move(num), den_);
    }
    // Henrici: with d = gcd(b, e), a/b + c/e = (a e' + c b') / (b' e) and
    // only d can share a factor with the new numerator.
    Polynomial d = gcd(den_, g.den_);
    if (d.is_constant()) {
      RationalFunction r(Raw{}, num_ * g.den_ + g.num_ * den_, den_ * g.den_);
      if (r.num_.is_zero()) {
        return RationalFunction();
      }
      r.normalize_content();
      return r;
    }
    Polynomial b1  = *den_.divide_exact(d);
    Polynomial e1  = *g.den_.divide_exact(d);
    Polynomial num = num_ * e1 + g.num_ * b1;
    if (num.is_zero()) {
      return RationalFunction();
    }
    Polynomial den = b1 * g.den_;
    Polynomial h   = gcd(num, d);
    if (!h.is_constant()) {
      num = *num.divide_exact(h);
      den = *den.divide_exact(h);
    }
    RationalFunction r(Raw{}, std::move(num), std::move(den));
    r.normalize_content();
    return r;
  }

  RationalFunction RationalFunction::operator-(RationalFunction const& g) const {
    return *this + (-g);
  }

  RationalFunction RationalFunction::operator*(RationalFunction const& g) const {
    if (is_zero() || g.is_zero()) {
      return RationalFunction();
    }
    if (is_constant() && g.is_constant()) {
      return RationalFunction(mpq_class(constant_value() * g.constant_value()));
    }
    if (is_constant() || g.is_constant()) {
      RationalFunction r(Raw{}, num_ * g.num_, den_ * g.den_);
      r.normalize_content();
      return r;
    }
    // Cross-cancel: inputs are reduced, so only num/den pairs across the
    // product can share factors.
    Polynomial a = num_;
    Polynomial b = den_;
    Polynomial c = g.num_;
    Polynomial e = g.den_;
    if (!e.is_constant()) {
      Polynomial g1 = gcd(a, e);
      if (!g1.is_constant()) {
        a = *a.divide_exact(g1);
        e = *e.divide_exact(g1);
      }
    }
    if (!b.is_constant()) {
      Polynomial g2 = gcd(c, b);
      if (!g2.is_constant()) {
        c = *c.divide_exact(g2);
        b = *b.divide_exact(g2);
      }
    }
    RationalFunction r(Raw{}, a * c, b * e);
    r.normalize_content();
    return r;
  }

  RationalFunction RationalFunction::operator/(RationalFunction const& g) const {
    return *this * g.inverse();
  }

  RationalFunction& RationalFunction::operator+=(RationalFunction const& g) {
    *this = *this + g;
    return *this;
  }
  RationalFunction& RationalFunction::operator-=(RationalFunction const& g) {
    *this = *this - g;
    return *this;
  }
  RationalFunction& RationalFunction::operator*=(RationalFunction const& g) {
    *this = *this * g;
    return *this;
  }
  RationalFunction& RationalFunction::operator/=(RationalFunction const& g) {
    *this = *this / g;
    return *this;
  }

  RationalFunction RationalFunction::inverse() const {
    if (is_zero()) {
      throw DivisionByZeroError();
    }
    RationalFunction r(Raw{}, den_, num_);
    r.normalize_content();
    return r;
  }

  RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) {
      return inverse().pow(-e);
    }
    if (e == 0) {
      return RationalFunction(1);
    }
    RationalFunction r(Raw{}, num_.pow(static_cast<unsigned>(e)),
                       den_.pow(static_cast<unsigned>(e)));
    r.normalize_content();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Specialization
  ////////////////////////////////////////////////////////////////////////

  mpq_class RationalFunction::evaluate(EvaluationPoint const& pt) const {
    mpq_class d = den_.evaluate(pt);
    if (sgn(d) == 0) {
      throw PoleError("denominator " + den_.to_string()
                      + " vanishes at the evaluation point");
    }
    return num_.evaluate(pt) / d;
  }

  namespace {
    RationalFunction horner(Polynomial const&       p,
                            VarIndex                v,
                            RationalFunction const& value) {
      auto             coeffs = p.coefficients_in(v);
      RationalFunction acc;
      for (std::size_t e = coeffs.size(); e-- > 0;) {
        acc = acc * value + RationalFunction(coeffs[e]);
      }
      return acc;
    }
  }  // namespace

  RationalFunction
  RationalFunction::substitute(std::string_view        var,
                               RationalFunction const& value) const {
    auto v = Alphabet::find(var);
    if (!v || (variables() & (VarMask(1) << *v)) == 0) {
      return *this;
    }
    RationalFunction d = horner(den_, *v, value);
    if (d.is_zero()) {
      throw PoleError("substitution makes the denominator vanish");
    }
    return horner(num_, *v, value) / d;
  }

  RationalFunction specialize(RationalFunction const& f,
                              EvaluationPoint const&  pt) {
    RationalFunction r = f;
    for (auto const& [name, value] : pt.assignments) {
      r = r.substitute(name, RationalFunction(value));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  std::string RationalFunction::to_string() const {
    std::string n = num_.to_string();
    if (den_.is_one()) {
      return n;
    }
    if (num_.size() > 1) {
      n = "(" + n + ")";
    }
    std::string d = den_.to_string();
    bool        bare
        = den_.is_constant()
          || (den_.size() == 1 && den_.leading().coeff == 1
              && std::popcount(den_.variables()) == 1);
    if (!bare) {
      d = "(" + d + ")";
    }
    return n + "/" + d;
  }

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != text_.size()) {
          fail("unexpected character");
        }
        return r;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '"
                         + std::string(text_) + "'");
      }

      void skip() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
          if (accept('+')) {
            acc = acc + term();
          } else if (accept('-')) {
            acc = acc - term();
          } else {
            return acc;
          }
        }
      }

      RationalFunction term() {
        RationalFunction acc = unary();
        while (true) {
          if (accept('*')) {
            acc = acc * unary();
          } else if (accept('/')) {
            RationalFunction d = unary();
            if (d.is_zero()) {
              throw DivisionByZeroError();
            }
            acc = acc / d;
          } else {
            return acc;
          }
        }
      }

      RationalFunction unary() {
        if (accept('-')) {
          return -unary();
        }
        if (accept('+')) {
          return unary();
        }
        return power();
      }

      RationalFunction power() {
        RationalFunction base = primary();
        if (accept('^')) {
          bool neg = accept('-');
          skip();
          std::size_t start = pos_;
          while (pos_ < text_.size()
                 && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
          if (start == pos_) {
            fail("expected exponent");
          }
          long e = std::stol(std::string(text_.substr(start, pos_ - start)));
          return base.pow(neg ? -e : e);
        }
        return base;
      }

      RationalFunction primary() {
        skip();
        if (pos_ >= text_.size()) {
          fail("unexpected end of input");
        }
        char c = text_[pos_];
        if (c == '(') {
          ++pos_;
          RationalFunction r = expr();
          if (!accept(')')) {
            fail("expected ')'");
          }
          return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t start = pos_;
          while (pos_ < text_.size()
                 && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
          mpz_class z(std::string(text_.substr(start, pos_ - start)));
          return RationalFunction(mpq_class(z));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
          std::size_t start = pos_;
          while (pos_ < text_.size()
                 && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
                     || text_[pos_] == '_')) {
            ++pos_;
          }
          return RationalFunction::variable(text_.substr(start, pos_ - start));
        }
        fail("unexpected character");
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  RationalFunction RationalFunction::parse(std::string_view text) {
    return Parser(text).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Equality
  ////////////////////////////////////////////////////////////////////////

  RandomPointGenerator::RandomPointGenerator(std::uint64_t seed)
      : state_(seed) {}

  namespace {
    // splitmix64: portable and stable across standard libraries.
    std::uint64_t splitmix(std::uint64_t& state) {
      std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
      z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      return z ^ (z >> 31);
    }
  }  // namespace

  mpq_class RandomPointGenerator::next() {
    long num = static_cast<long>(splitmix(state_) % 2000001) - 1000000;
    long den = static_cast<long>(splitmix(state_) % 64) + 1;
    mpq_class r(num, den);
    r.canonicalize();
    return r;
  }

  EvaluationPoint RandomPointGenerator::point(VarMask vars) {
    EvaluationPoint pt;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (vars & (VarMask(1) << v)) {
        pt.set(Alphabet::name(static_cast<VarIndex>(v)), next());
      }
    }
    return pt;
  }

  bool equals(RationalFunction const& f,
              RationalFunction const& g,
              EqualityMode const&     mode) {
    if (std::holds_alternative<ExactEquality>(mode)) {
      if (f == g) {
        return true;
      }
      Polynomial lhs = f.numerator() * g.denominator();
      Polynomial rhs = g.numerator() * f.denominator();
      return (lhs - rhs).is_zero();
    }
    auto const& prob = std::get<ProbabilisticEquality>(mode);
    VarMask     vars = f.variables() | g.variables();
    if (vars == 0) {
      return f.constant_value() == g.constant_value();
    }
    RandomPointGenerator gen(prob.seed);
    unsigned const       budget = 16 * prob.trials + 16;
    unsigned             done   = 0;
    for (unsigned attempt = 0; done < prob.trials; ++attempt) {
      if (attempt >= budget) {
        throw NoPoleFreePointError("no pole-free evaluation point found in "
                                   + std::to_string(budget) + " attempts");
      }
      EvaluationPoint pt = gen.point(vars);
      mpq_class       fd = f.denominator().evaluate(pt);
      mpq_class       gd = g.denominator().evaluate(pt);
      if (sgn(fd) == 0 || sgn(gd) == 0) {
        continue;
      }
      if (f.numerator().evaluate(pt) * gd != g.numerator().evaluate(pt) * fd) {
        return false;
      }
      ++done;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named scalars
  ////////////////////////////////////////////////////////////////////////

  RationalFunction const& q_symbol() {
    static RationalFunction const q = RationalFunction::variable("q");
    return q;
  }

  RationalFunction qbracket(unsigned m) {
    RationalFunction const& q = q_symbol();
    return (q.pow(m) - q.pow(-static_cast<long>(m))) / (q - q.inverse());
  }

}  // namespace qonsager
