#include "qonsager/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qonsager/errors.hpp"
#include "qonsager/rational_function.hpp"

namespace qonsager {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Registry {
      std::mutex               mutex;
      std::vector<std::string> names{"q", "a1", "a2", "a3", "b1", "b2", "b3", "n"};
    };

    Registry& registry() {
      static Registry r;
      return r;
    }

    bool valid_name(std::string_view name) {
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
      }
      return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }
  }  // namespace

  VarIndex Alphabet::index(std::string_view name) {
    auto&            r = registry();
    std::lock_guard lock(r.mutex);
    for (std::size_t i = 0; i < r.names.size(); ++i) {
      if (r.names[i] == name) {
        return static_cast<VarIndex>(i);
      }
    }
    if (!valid_name(name)) {
      throw std::invalid_argument("invalid indeterminate name '"
                                  + std::string(name) + "'");
    }
    if (r.names.size() == kMaxVariables) {
      throw std::length_error("too many indeterminates (limit "
                              + std::to_string(kMaxVariables) + ")");
    }
    r.names.emplace_back(name);
    return static_cast<VarIndex>(r.names.size() - 1);
  }

  std::optional<VarIndex> Alphabet::find(std::string_view name) {
    auto&            r = registry();
    std::lock_guard lock(r.mutex);
    for (std::size_t i = 0; i < r.names.size(); ++i) {
      if (r.names[i] == name) {
        return static_cast<VarIndex>(i);
      }
    }
    return std::nullopt;
  }

  std::string Alphabet::name(VarIndex v) {
    auto&            r = registry();
    std::lock_guard lock(r.mutex);
    if (v >= r.names.size()) {
      throw std::out_of_range("unregistered indeterminate index");
    }
    return r.names[v];
  }

  std::size_t Alphabet::size() {
    auto&            r = registry();
    std::lock_guard lock(r.mutex);
    return r.names.size();
  }

  std::vector<std::string> Alphabet::names() {
    auto&            r = registry();
    std::lock_guard lock(r.mutex);
    return r.names;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monomial
  ////////////////////////////////////////////////////////////////////////

  Monomial Monomial::variable(VarIndex v, unsigned exponent) {
    Monomial m;
    m.set_exponent(v, exponent);
    return m;
  }

  void Monomial::set_exponent(VarIndex v, unsigned e) {
    if (v >= kMaxVariables || e > 0xFFFF) {
      throw std::out_of_range("monomial exponent out of range");
    }
    deg_    = deg_ - exp_[v] + e;
    exp_[v] = static_cast<std::uint16_t>(e);
  }

  VarMask Monomial::mask() const noexcept {
    VarMask m = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] != 0) {
        m |= VarMask(1) << i;
      }
    }
    return m;
  }

  Monomial Monomial::operator*(Monomial const& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = unsigned(exp_[i]) + other.exp_[i];
      if (e > 0xFFFF) {
        throw std::overflow_error("monomial exponent overflow");
      }
      r.exp_[i] = static_cast<std::uint16_t>(e);
    }
    r.deg_ = deg_ + other.deg_;
    return r;
  }

  bool Monomial::divides(Monomial const& other) const noexcept {
    if (deg_ > other.deg_) {
      return false;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] > other.exp_[i]) {
        return false;
      }
    }
    return true;
  }

  Monomial Monomial::operator/(Monomial const& divisor) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - divisor.exp_[i]);
    }
    r.deg_ = deg_ - divisor.deg_;
    return r;
  }

  Monomial Monomial::gcd(Monomial const& x, Monomial const& y) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = std::min(x.exp_[i], y.exp_[i]);
      r.deg_ += r.exp_[i];
    }
    return r;
  }

  Monomial Monomial::lcm(Monomial const& x, Monomial const& y) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exp_[i] = std::max(x.exp_[i], y.exp_[i]);
      r.deg_ += r.exp_[i];
    }
    return r;
  }

  Monomial Monomial::restrict(VarMask keep) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (keep & (VarMask(1) << i)) {
        r.exp_[i] = exp_[i];
        r.deg_ += exp_[i];
      }
    }
    return r;
  }

  std::strong_ordering operator<=>(Monomial const& x,
                                   Monomial const& y) noexcept {
    if (x.deg_ != y.deg_) {
      return x.deg_ <=> y.deg_;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (x.exp_[i] != y.exp_[i]) {
        return x.exp_[i] <=> y.exp_[i];
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : exp_) {
      h = (h ^ e) * 1099511628211ULL;
    }
    return h;
  }

  std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += '*';
      }
      out += Alphabet::name(static_cast<VarIndex>(i));
      if (exp_[i] > 1) {
        out += '^';
        out += std::to_string(exp_[i]);
      }
    }
    return out.empty() ? "1" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Polynomial
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool term_greater(Term const& x, Term const& y) {
      return x.mono > y.mono;
    }

    // Merges two canonical term lists, adding (sign = +1) or subtracting.
    std::vector<Term> merge(std::vector<Term> const& x,
                            std::vector<Term> const& y,
                            bool                     subtract) {
      std::vector<Term> out;
      out.reserve(x.size() + y.size());
      auto i = x.begin();
      auto j = y.begin();
      while (i != x.end() && j != y.end()) {
        auto c = i->mono <=> j->mono;
        if (c > 0) {
          out.push_back(*i++);
        } else if (c < 0) {
          out.push_back(subtract ? Term{j->mono, -j->coeff} : *j);
          ++j;
        } else {
          mpq_class s = subtract ? mpq_class(i->coeff - j->coeff)
                                 : mpq_class(i->coeff + j->coeff);
          if (sgn(s) != 0) {
            out.push_back(Term{i->mono, std::move(s)});
          }
          ++i;
          ++j;
        }
      }
      for (; i != x.end(); ++i) {
        out.push_back(*i);
      }
      for (; j != y.end(); ++j) {
        out.push_back(subtract ? Term{j->mono, -j->coeff} : *j);
      }
      return out;
    }

    void combine_sorted(std::vector<Term>& terms) {
      std::size_t w = 0;
      for (std::size_t r = 0; r < terms.size();) {
        Term acc = std::move(terms[r]);
        ++r;
        while (r < terms.size() && terms[r].mono == acc.mono) {
          acc.coeff += terms[r].coeff;
          ++r;
        }
        if (sgn(acc.coeff) != 0) {
          terms[w++] = std::move(acc);
        }
      }
      terms.resize(w);
    }
  }  // namespace

  Polynomial::Polynomial(long c) {
    if (c != 0) {
      terms_.push_back(Term{Monomial(), mpq_class(c)});
    }
  }

  Polynomial::Polynomial(mpq_class const& c) {
    if (sgn(c) != 0) {
      terms_.push_back(Term{Monomial(), c});
    }
  }

  Polynomial::Polynomial(mpq_class const& c, Monomial const& m) {
    if (sgn(c) != 0) {
      terms_.push_back(Term{m, c});
    }
  }

  Polynomial Polynomial::variable(std::string_view name) {
    return variable(Alphabet::index(name));
  }

  Polynomial Polynomial::variable(VarIndex v) {
    return Polynomial(mpq_class(1), Monomial::variable(v));
  }

  Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    combine_sorted(terms);
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one()
           && terms_[0].coeff == 1;
  }

  mpq_class Polynomial::constant_value() const {
    if (!is_constant()) {
      throw std::logic_error("polynomial is not constant");
    }
    return terms_.empty() ? mpq_class(0) : terms_[0].coeff;
  }

  VarMask Polynomial::variables() const noexcept {
    VarMask m = 0;
    for (auto const& t : terms_) {
      m |= t.mono.mask();
    }
    return m;
  }

  unsigned Polynomial::degree(VarIndex v) const noexcept {
    unsigned d = 0;
    for (auto const& t : terms_) {
      d = std::max(d, t.mono.exponent(v));
    }
    return d;
  }

  unsigned Polynomial::total_degree() const noexcept {
    return terms_.empty() ? 0 : terms_.front().mono.degree();
  }

  Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) {
      return Monomial();
    }
    Monomial g = terms_.front().mono;
    for (auto const& t : terms_) {
      g = Monomial::gcd(g, t.mono);
      if (g.is_one()) {
        break;
      }
    }
    return g;
  }

  Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.coeff = -t.coeff;
    }
    return r;
  }

  Polynomial Polynomial::operator+(Polynomial const& other) const {
    Polynomial r;
    r.terms_ = merge(terms_, other.terms_, false);
    return r;
  }

  Polynomial Polynomial::operator-(Polynomial const& other) const {
    Polynomial r;
    r.terms_ = merge(terms_, other.terms_, true);
    return r;
  }

  Polynomial Polynomial::operator*(Polynomial const& other) const {
    if (terms_.empty() || other.terms_.empty()) {
      return Polynomial();
    }
    if (terms_.size() == 1) {
      return other.shifted(terms_[0].mono).scaled(terms_[0].coeff);
    }
    if (other.terms_.size() == 1) {
      return shifted(other.terms_[0].mono).scaled(other.terms_[0].coeff);
    }
    std::vector<Term> prod;
    prod.reserve(terms_.size() * other.terms_.size());
    for (auto const& x : terms_) {
      for (auto const& y : other.terms_) {
        prod.push_back(Term{x.mono * y.mono, x.coeff * y.coeff});
      }
    }
    return from_terms(std::move(prod));
  }

  Polynomial& Polynomial::operator+=(Polynomial const& other) {
    terms_ = merge(terms_, other.terms_, false);
    return *this;
  }

  Polynomial& Polynomial::operator-=(Polynomial const& other) {
    terms_ = merge(terms_, other.terms_, true);
    return *this;
  }

  Polynomial& Polynomial::operator*=(Polynomial const& other) {
    *this = *this * other;
    return *this;
  }

  Polynomial Polynomial::scaled(mpq_class const& c) const {
    if (sgn(c) == 0) {
      return Polynomial();
    }
    Polynomial r = *this;
    if (c != 1) {
      for (auto& t : r.terms_) {
        t.coeff *= c;
      }
    }
    return r;
  }

  Polynomial Polynomial::shifted(Monomial const& m) const {
    Polynomial r = *this;
    if (!m.is_one()) {
      for (auto& t : r.terms_) {
        t.mono = t.mono * m;
      }
    }
    return r;
  }

  Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1U) {
        result *= base;
      }
      e >>= 1U;
      if (e != 0) {
        base *= base;
      }
    }
    return result;
  }

  std::optional<Polynomial>
  Polynomial::divide_exact(Polynomial const& divisor) const {
    if (divisor.is_zero()) {
      throw DivisionByZeroError();
    }
    if (is_zero()) {
      return Polynomial();
    }
    if (divisor.is_constant()) {
      return scaled(1 / divisor.constant_value());
    }
    if (divisor.terms_.size() == 1) {
      auto const& d = divisor.terms_[0];
      Polynomial  r;
      r.terms_.reserve(terms_.size());
      mpq_class inv = 1 / d.coeff;
      for (auto const& t : terms_) {
        if (!d.mono.divides(t.mono)) {
          return std::nullopt;
        }
        r.terms_.push_back(Term{t.mono / d.mono, t.coeff * inv});
      }
      return r;
    }
    // Cheap necessary conditions before long division.
    if ((divisor.variables() & ~variables()) != 0
        || divisor.total_degree() > total_degree()) {
      return std::nullopt;
    }
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (divisor.degree(static_cast<VarIndex>(v))
          > degree(static_cast<VarIndex>(v))) {
        return std::nullopt;
      }
    }
    Term const&       lead = divisor.terms_.front();
    mpq_class         inv  = 1 / lead.coeff;
    Polynomial        rem  = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      Term const& r = rem.terms_.front();
      if (!lead.mono.divides(r.mono)) {
        return std::nullopt;
      }
      Term t{r.mono / lead.mono, r.coeff * inv};
      rem -= divisor.shifted(t.mono).scaled(t.coeff);
      quot.push_back(std::move(t));
    }
    Polynomial q;
    q.terms_ = std::move(quot);  // produced in decreasing order
    return q;
  }

  std::vector<Polynomial> Polynomial::coefficients_in(VarIndex v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (auto const& t : terms_) {
      Monomial m = t.mono;
      unsigned e = m.exponent(v);
      m.set_exponent(v, 0);
      buckets[e].push_back(Term{m, t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      out.push_back(from_terms(std::move(b)));
    }
    return out;
  }

  Polynomial Polynomial::from_coefficients(std::vector<Polynomial> const& coeffs,
                                           VarIndex                       v) {
    std::vector<Term> all;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      Monomial x = Monomial::variable(v, static_cast<unsigned>(e));
      for (auto const& t : coeffs[e].terms_) {
        all.push_back(Term{t.mono * x, t.coeff});
      }
    }
    return from_terms(std::move(all));
  }

  mpq_class Polynomial::evaluate(EvaluationPoint const& pt) const {
    std::array<std::optional<mpq_class>, kMaxVariables> values;
    VarMask                                           used = variables();
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (used & (VarMask(1) << v)) {
        values[v] = pt.at(Alphabet::name(static_cast<VarIndex>(v)));
      }
    }
    mpq_class sum = 0;
    mpq_class power;
    for (auto const& t : terms_) {
      mpq_class prod = t.coeff;
      for (std::size_t v = 0; v < kMaxVariables; ++v) {
        unsigned e = t.mono.exponent(static_cast<VarIndex>(v));
        if (e != 0) {
          mpz_pow_ui(power.get_num_mpz_t(), values[v]->get_num_mpz_t(), e);
          mpz_pow_ui(power.get_den_mpz_t(), values[v]->get_den_mpz_t(), e);
          prod *= power;
        }
      }
      sum += prod;
    }
    return sum;
  }

  mpz_class integer_content(Polynomial const& p) {
    mpz_class g = 0;
    for (auto const& t : p.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    return g;
  }

  std::pair<mpq_class, Polynomial> Polynomial::primitive() const {
    if (terms_.empty()) {
      return {mpq_class(1), Polynomial()};
    }
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (auto const& t : terms_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              t.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              t.coeff.get_den_mpz_t());
    }
    mpq_class factor(num_gcd, den_lcm);
    factor.canonicalize();
    if (sgn(terms_.front().coeff) < 0) {
      factor = -factor;
    }
    if (factor == 1) {
      return {factor, *this};
    }
    Polynomial p   = *this;
    mpq_class  inv = 1 / factor;
    for (auto& t : p.terms_) {
      t.coeff *= inv;
    }
    return {factor, std::move(p)};
  }

  bool operator==(Polynomial const& x, Polynomial const& y) {
    if (x.terms_.size() != y.terms_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.terms_.size(); ++i) {
      if (!(x.terms_[i].mono == y.terms_[i].mono)
          || x.terms_[i].coeff != y.terms_[i].coeff) {
        return false;
      }
    }
    return true;
  }

  std::string Polynomial::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& t : terms_) {
      mpq_class c   = t.coeff;
      bool      neg = sgn(c) < 0;
      if (neg) {
        c = -c;
      }
      if (first) {
        if (neg) {
          out += '-';
        }
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      if (t.mono.is_one()) {
        out += c.get_str();
      } else if (c == 1) {
        out += t.mono.to_string();
      } else {
        out += c.get_str();
        out += '*';
        out += t.mono.to_string();
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GCD
  ////////////////////////////////////////////////////////////////////////

  namespace {

    unsigned popcount(VarMask m) {
      return static_cast<unsigned>(__builtin_popcount(m));
    }

    Polynomial normalized(Polynomial const& p) {
      return p.primitive().second;
    }

    // gcd of the coefficients of p viewed as a polynomial in the variables
    // of `outer` (with coefficients in the remaining variables).
    Polynomial content_over(Polynomial const& p, VarMask outer) {
      std::vector<std::pair<Monomial, std::vector<Term>>> groups;
      {
        std::vector<std::pair<Monomial, Term>> keyed;
        keyed.reserve(p.size());
        VarMask inner = ~outer;
        for (auto const& t : p.terms()) {
          keyed.emplace_back(t.mono.restrict(outer),
                             Term{t.mono.restrict(inner), t.coeff});
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](auto const& x, auto const& y) {
                           return x.first > y.first;
                         });
        for (auto& [key, term] : keyed) {
          if (groups.empty() || !(groups.back().first == key)) {
            groups.emplace_back(key, std::vector<Term>{});
          }
          groups.back().second.push_back(std::move(term));
        }
      }
      // Smallest groups first: they shrink the running gcd fastest.
      std::sort(groups.begin(), groups.end(), [](auto const& x, auto const& y) {
        return x.second.size() < y.second.size();
      });
      Polynomial g;
      for (auto& [key, terms] : groups) {
        Polynomial c = Polynomial::from_terms(std::move(terms));
        g            = g.is_zero() ? normalized(c) : gcd(g, c);
        if (g.is_constant()) {
          return Polynomial(1);
        }
      }
      return g;
    }

    // Univariate Euclid over Q using dense coefficient vectors.
    Polynomial univariate_gcd(Polynomial const& x,
                              Polynomial const& y,
                              VarIndex          v) {
      auto dense = [v](Polynomial const& p) {
        std::vector<mpq_class> c(p.degree(v) + 1);
        for (auto const& t : p.terms()) {
          c[t.mono.exponent(v)] = t.coeff;
        }
        return c;
      };
      auto trim = [](std::vector<mpq_class>& c) {
        while (!c.empty() && sgn(c.back()) == 0) {
          c.pop_back();
        }
      };
      std::vector<mpq_class> a = dense(x);
      std::vector<mpq_class> b = dense(y);
      trim(a);
      trim(b);
      if (a.size() < b.size()) {
        std::swap(a, b);
      }
      while (!b.empty()) {
        // a <- a mod b
        mpq_class inv = 1 / b.back();
        while (a.size() >= b.size()) {
          mpq_class   f     = a.back() * inv;
          std::size_t shift = a.size() - b.size();
          for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= f * b[i];
          }
          a.pop_back();
          trim(a);
          if (a.empty()) {
            break;
          }
        }
        std::swap(a, b);
      }
      std::vector<Term> terms;
      for (std::size_t e = 0; e < a.size(); ++e) {
        if (sgn(a[e]) != 0) {
          terms.push_back(Term{Monomial::variable(v, static_cast<unsigned>(e)),
                               a[e]});
        }
      }
      return normalized(Polynomial::from_terms(std::move(terms)));
    }

    using Dense = std::vector<Polynomial>;

    void trim(Dense& c) {
      while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
      }
    }

    // Content of a dense-in-v polynomial: gcd of its coefficients.
    Polynomial dense_content(Dense const& c) {
      std::vector<Polynomial const*> order;
      for (auto const& x : c) {
        if (!x.is_zero()) {
          order.push_back(&x);
        }
      }
      std::sort(order.begin(), order.end(),
                [](auto x, auto y) { return x->size() < y->size(); });
      Polynomial g;
      for (auto const* x : order) {
        g = g.is_zero() ? normalized(*x) : gcd(g, *x);
        if (g.is_constant()) {
          return Polynomial(1);
        }
      }
      return g;
    }

    void dense_divide(Dense& c, Polynomial const& d) {
      if (d.is_one()) {
        return;
      }
      for (auto& x : c) {
        auto qt = x.divide_exact(d);
        if (!qt) {
          throw std::logic_error("content division was not exact");
        }
        x = std::move(*qt);
      }
    }

    // Primitive polynomial remainder sequence in main variable v.
    Polynomial multivariate_gcd(Polynomial const& x,
                                Polynomial const& y,
                                VarIndex          v) {
      Dense a = x.coefficients_in(v);
      Dense b = y.coefficients_in(v);
      trim(a);
      trim(b);
      Polynomial ca = dense_content(a);
      Polynomial cb = dense_content(b);
      Polynomial c  = gcd(ca, cb);
      dense_divide(a, ca);
      dense_divide(b, cb);
      if (a.size() < b.size()) {
        std::swap(a, b);
      }
      while (true) {
        if (b.size() == 1) {
          // b is a nonzero polynomial free of v and primitive: a unit here.
          return c;
        }
        // Pseudo-remainder of a by b.
        Polynomial const& lcb = b.back();
        while (a.size() >= b.size()) {
          Polynomial  lca   = a.back();
          std::size_t shift = a.size() - b.size();
          for (auto& coeff : a) {
            coeff = coeff * lcb;
          }
          for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= lca * b[i];
          }
          trim(a);
          if (a.empty()) {
            break;
          }
        }
        if (a.empty()) {
          Polynomial g = Polynomial::from_coefficients(b, v);
          return normalized(c * g);
        }
        Polynomial ct = dense_content(a);
        dense_divide(a, ct);
        std::swap(a, b);
      }
    }

  }  // namespace

  Polynomial gcd(Polynomial const& x_in, Polynomial const& y_in) {
    if (x_in.is_zero()) {
      return normalized(y_in);
    }
    if (y_in.is_zero()) {
      return normalized(x_in);
    }
    if (x_in.is_constant() || y_in.is_constant()) {
      return Polynomial(1);
    }
    Monomial mx = x_in.monomial_content();
    Monomial my = y_in.monomial_content();
    Monomial mg = Monomial::gcd(mx, my);
    Polynomial const mono_part(mpq_class(1), mg);

    if (x_in.is_monomial() || y_in.is_monomial()) {
      return mono_part;
    }
    Polynomial x = normalized(mx.is_one() ? x_in : *x_in.divide_exact(
                                                Polynomial(mpq_class(1), mx)));
    Polynomial y = normalized(my.is_one() ? y_in : *y_in.divide_exact(
                                                Polynomial(mpq_class(1), my)));
    if (x.is_constant() || y.is_constant()) {
      return mono_part;
    }
    VarMask vx     = x.variables();
    VarMask vy     = y.variables();
    VarMask shared = vx & vy;
    if (shared == 0) {
      return mono_part;
    }
    // A common divisor involves only shared variables, so it divides the
    // content taken over the private ones.
    if (vx != shared || vy != shared) {
      Polynomial cx = vx != shared ? content_over(x, vx & ~shared) : x;
      if (cx.is_constant()) {
        return mono_part;
      }
      Polynomial cy = vy != shared ? content_over(y, vy & ~shared) : y;
      if (cy.is_constant()) {
        return mono_part;
      }
      return mono_part * gcd(cx, cy);
    }
    if (x == y) {
      return mono_part * x;
    }
    if (y.size() <= x.size()) {
      if (x.divide_exact(y)) {
        return mono_part * y;
      }
    } else if (y.divide_exact(x)) {
      return mono_part * x;
    }
    if (popcount(shared) == 1) {
      VarIndex v = static_cast<VarIndex>(__builtin_ctz(shared));
      return mono_part * univariate_gcd(x, y, v);
    }
    // Main variable: the shared variable of lowest combined degree.
    VarIndex best     = 0;
    unsigned best_deg = ~0U;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (shared & (VarMask(1) << v)) {
        unsigned d = x.degree(static_cast<VarIndex>(v))
                     + y.degree(static_cast<VarIndex>(v));
        if (d < best_deg) {
          best_deg = d;
          best     = static_cast<VarIndex>(v);
        }
      }
    }
    return mono_part * multivariate_gcd(x, y, best);
  }

}  // namespace qonsager
