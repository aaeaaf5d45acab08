#include "qonsager/hexagon.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "qonsager/errors.hpp"

namespace qonsager {

  // ---- parameters --------------------------------------------------------

  bool ExampleParams::is_fully_specialized() const {
    for (auto const* k : kParamNames) {
      if (!fixed.has(k)) {
        return false;
      }
    }
    return true;
  }

  RationalFunction ExampleParams::value(std::string const& name) const {
    if (fixed.has(name)) {
      return RationalFunction(fixed.at(name));
    }
    return RationalFunction::variable(name);
  }

  void ExampleParams::validate() const {
    for (auto const& [k, v] : fixed.assignments) {
      if (std::find_if(kParamNames.begin(), kParamNames.end(),
                       [&](char const* p) { return k == p; })
          == kParamNames.end()) {
        throw ParameterError("unknown parameter '" + k + "'");
      }
      if (v == 0) {
        throw ParameterError(k + " must be nonzero");
      }
      if (k == "q" && (v == 1 || v == -1)) {
        throw ParameterError("q must not be 1 or -1 (q^2 - q^-2 vanishes)");
      }
      if ((k[0] == 'a' || k[0] == 'b') && v * v == 1) {
        throw ParameterError(k + "^2 must differ from 1");
      }
    }
  }

  std::string ExampleParams::describe() const {
    if (is_symbolic()) {
      return "symbolic";
    }
    std::string s;
    for (auto const* k : kParamNames) {
      if (fixed.has(k)) {
        s += (s.empty() ? "" : ", ") + std::string(k) + "="
             + fixed.at(k).get_str();
      }
    }
    return s;
  }

  ExampleParams seeded_params(std::uint64_t seed, EvaluationPoint const& overrides) {
    std::mt19937_64                    rng(seed);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    ExampleParams                      p;
    for (auto const* k : kParamNames) {
      if (overrides.has(k)) {
        p.fixed.set(k, overrides.at(k));
        continue;
      }
      std::string const name = k;
      mpq_class         v;
      while (true) {
        v = mpq_class(num(rng), den(rng));
        v.canonicalize();
        bool bad = v == 0 || v * v == 1;
        // n = 1, 2 collapse the module; keep generic draws away from them.
        if (name == "n" && v == 2) {
          bad = true;
        }
        if (!bad) {
          break;
        }
      }
      p.fixed.set(name, v);
    }
    p.validate();
    return p;
  }

  ExampleParams parse_params(std::string_view text) {
    ExampleParams      p;
    std::istringstream in{std::string(text)};
    std::string        line;
    int                lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.erase(h);
      }
      auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'name = value'");
      }
      std::string key = trim(line.substr(0, eq));
      std::string val = trim(line.substr(eq + 1));
      if (p.fixed.has(key)) {
        throw ParameterError("parameter '" + key + "' given twice");
      }
      mpq_class v;
      if (v.set_str(val, 10) != 0) {
        throw ParseError("line " + std::to_string(lineno) + ": bad rational '"
                         + val + "'");
      }
      if (v.get_den() == 0) {
        throw ParseError("line " + std::to_string(lineno) + ": zero denominator");
      }
      v.canonicalize();
      p.fixed.set(key, v);
    }
    p.validate();
    for (auto const* k : kParamNames) {
      if (!p.fixed.has(k)) {
        throw ParameterError(std::string("parameter '") + k + "' is missing");
      }
    }
    return p;
  }

  ExampleParams load_params(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParameterError("cannot read parameter file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_params(buf.str());
  }

  // ---- matrices ----------------------------------------------------------

  namespace {
    using Rows = std::vector<std::vector<char const*>>;

    // Parses a displayed matrix, then specializes any fixed parameters.
    Matrix typed(Rows const& rows, ExampleParams const& p) {
      std::vector<std::vector<RationalFunction>> r;
      for (auto const& row : rows) {
        auto& out = r.emplace_back();
        for (char const* s : row) {
          RationalFunction f = RationalFunction::parse(s);
          for (auto const& [k, v] : p.fixed.assignments) {
            f = f.substitute(k, RationalFunction(v));
          }
          out.push_back(std::move(f));
        }
      }
      return Matrix::from_rows(std::move(r));
    }

    struct Scalars {
      RationalFunction hi, lo, off;
    };

    // x q + x^-1 q^-1, x q^-1 + x^-1 q and (x - x^-1)(q - q^-1).
    Scalars scalars(RationalFunction const& x, RationalFunction const& q) {
      return {x * q + x.inverse() * q.inverse(), x * q.inverse() + x.inverse() * q,
              (x - x.inverse()) * (q - q.inverse())};
    }

    // Positions (row, col), zero-based, of the off-diagonal entries and the
    // rows carrying the "hi" eigenvalue.
    struct Pattern {
      std::vector<std::pair<int, int>> off;
      std::vector<int>                 hi;
    };

    Pattern const kAPattern[3] = {
        {{{0, 2}, {0, 3}, {1, 4}}, {0, 1}},
        {{{0, 1}, {0, 3}, {2, 4}}, {0, 2}},
        {{{0, 1}, {0, 2}, {3, 4}}, {0, 3}},
    };
    Pattern const kBPattern[3] = {
        {{{1, 0}, {4, 2}, {4, 3}}, {1, 4}},
        {{{2, 0}, {4, 1}, {4, 3}}, {2, 4}},
        {{{3, 0}, {4, 1}, {4, 2}}, {3, 4}},
    };

    Matrix patterned(Pattern const& pat, Scalars const& s,
                     RationalFunction const& off) {
      Matrix m(5);
      for (int i = 0; i < 5; ++i) {
        m(i, i) = s.lo;
      }
      for (int i : pat.hi) {
        m(i, i) = s.hi;
      }
      for (auto [i, j] : pat.off) {
        m(i, j) = off;
      }
      return m;
    }
  }  // namespace

  namespace displayed {
    Matrix T_inverse(ExampleParams const& p) {
      return typed({{"1", "-1", "-1", "-1", "2"},
                    {"0", "1", "0", "0", "-1"},
                    {"0", "0", "1", "0", "-1"},
                    {"0", "0", "0", "1", "-1"},
                    {"0", "0", "0", "0", "1"}},
                   p);
    }

    Matrix Ts_inverse(ExampleParams const& p) {
      return typed({{"1", "0", "0", "0", "0"},
                    {"-1/n", "1", "0", "0", "0"},
                    {"-1/n", "0", "1", "0", "0"},
                    {"-1/n", "0", "0", "1", "0"},
                    {"2/n^2", "-1/n", "-1/n", "-1/n", "1"}},
                   p);
    }

    Matrix T_E(int i, ExampleParams const&) {
      std::vector<RationalFunction> d = {1, 0, 0, 0, 0};
      d.at(i) = 1;
      return Matrix::diagonal(d);
    }

    Matrix T_Es(int i, ExampleParams const& p) {
      static Rows const rows[3] = {
          {{"1/n", "1 - 1/n", "0", "0", "0"},
           {"1/n", "1 - 1/n", "0", "0", "0"},
           {"0", "0", "1/n", "1/n", "1 - 2/n"},
           {"0", "0", "1/n", "1/n", "1 - 2/n"},
           {"0", "0", "1/n", "1/n", "1 - 2/n"}},
          {{"1/n", "0", "1 - 1/n", "0", "0"},
           {"0", "1/n", "0", "1/n", "1 - 2/n"},
           {"1/n", "0", "1 - 1/n", "0", "0"},
           {"0", "1/n", "0", "1/n", "1 - 2/n"},
           {"0", "1/n", "0", "1/n", "1 - 2/n"}},
          {{"1/n", "0", "0", "1 - 1/n", "0"},
           {"0", "1/n", "1/n", "0", "1 - 2/n"},
           {"0", "1/n", "1/n", "0", "1 - 2/n"},
           {"1/n", "0", "0", "1 - 1/n", "0"},
           {"0", "1/n", "1/n", "0", "1 - 2/n"}},
      };
      return typed(rows[i - 1], p);
    }

    Matrix Ts_E(int i, ExampleParams const& p) {
      static Rows const rows[3] = {
          {{"1 - 2/n", "0", "1", "1", "0"},
           {"0", "1 - 1/n", "0", "0", "1"},
           {"1/n - 2/n^2", "0", "1/n", "1/n", "0"},
           {"1/n - 2/n^2", "0", "1/n", "1/n", "0"},
           {"0", "1/n - 1/n^2", "0", "0", "1/n"}},
          {{"1 - 2/n", "1", "0", "1", "0"},
           {"1/n - 2/n^2", "1/n", "0", "1/n", "0"},
           {"0", "0", "1 - 1/n", "0", "1"},
           {"1/n - 2/n^2", "1/n", "0", "1/n", "0"},
           {"0", "0", "1/n - 1/n^2", "0", "1/n"}},
          {{"1 - 2/n", "1", "1", "0", "0"},
           {"1/n - 2/n^2", "1/n", "1/n", "0", "0"},
           {"1/n - 2/n^2", "1/n", "1/n", "0", "0"},
           {"0", "0", "0", "1 - 1/n", "1"},
           {"0", "0", "0", "1/n - 1/n^2", "1/n"}},
      };
      return typed(rows[i - 1], p);
    }

    Matrix Ts_Es(int i, ExampleParams const&) {
      std::vector<RationalFunction> d = {0, 0, 0, 0, 1};
      d.at(i) = 1;
      return Matrix::diagonal(d);
    }

    Matrix T_Lambda(int i, ExampleParams const&) {
      std::vector<RationalFunction> d(5, RationalFunction(0));
      d.at(i - 1) = 1;
      return Matrix::diagonal(d);
    }

    Matrix T_LambdaS1(ExampleParams const& p) {
      std::vector<char const*> row
          = {"1/n^2", "(n - 1)/n^2", "(n - 1)/n^2", "(n - 1)/n^2",
             "(n - 1)*(n - 2)/n^2"};
      return typed({row, row, row, row, row}, p);
    }
  }  // namespace displayed

  ExampleBundle build_example(ExampleParams const& params) {
    params.validate();
    ExampleBundle b;
    b.params                  = params;
    RationalFunction const q  = params.value("q");
    RationalFunction const n  = params.value("n");
    for (int i = 0; i < 3; ++i) {
      std::string const idx = std::to_string(i + 1);
      Scalars           a   = scalars(params.value("a" + idx), q);
      Scalars           bb  = scalars(params.value("b" + idx), q);
      b.A[i]                = patterned(kAPattern[i], a, a.off);
      // The B-images carry their "lo" eigenvalue b q^-1 + b^-1 q on the
      // rows outside the pattern and the off-diagonal entries scaled by 1/n.
      b.B[i] = patterned(kBPattern[i], bb, bb.off / n);
    }
    b.E[0] = typed({{"1", "0", "1", "1", "0"}, {"0", "1", "0", "0", "1"},
                    {"0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0"},
                    {"0", "0", "0", "0", "0"}},
                   params);
    b.E[1] = typed({{"1", "1", "0", "1", "0"}, {"0", "0", "0", "0", "0"},
                    {"0", "0", "1", "0", "1"}, {"0", "0", "0", "0", "0"},
                    {"0", "0", "0", "0", "0"}},
                   params);
    b.E[2] = typed({{"1", "1", "1", "0", "0"}, {"0", "0", "0", "0", "0"},
                    {"0", "0", "0", "0", "0"}, {"0", "0", "0", "1", "1"},
                    {"0", "0", "0", "0", "0"}},
                   params);
    b.Es[0] = typed({{"0", "0", "0", "0", "0"}, {"1/n", "1", "0", "0", "0"},
                     {"0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0"},
                     {"0", "0", "1/n", "1/n", "1"}},
                    params);
    b.Es[1] = typed({{"0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0"},
                     {"1/n", "0", "1", "0", "0"}, {"0", "0", "0", "0", "0"},
                     {"0", "1/n", "0", "1/n", "1"}},
                    params);
    b.Es[2] = typed({{"0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0"},
                     {"0", "0", "0", "0", "0"}, {"1/n", "0", "0", "1", "0"},
                     {"0", "1/n", "1/n", "0", "1"}},
                    params);
    b.T  = typed({{"1", "1", "1", "1", "1"}, {"0", "1", "0", "0", "1"},
                  {"0", "0", "1", "0", "1"}, {"0", "0", "0", "1", "1"},
                  {"0", "0", "0", "0", "1"}},
                 params);
    b.Ts = typed({{"1", "0", "0", "0", "0"}, {"1/n", "1", "0", "0", "0"},
                  {"1/n", "0", "1", "0", "0"}, {"1/n", "0", "0", "1", "0"},
                  {"1/n^2", "1/n", "1/n", "1/n", "1"}},
                 params);
    b.T_inv  = inverse(b.T);
    b.Ts_inv = inverse(b.Ts);

    Matrix const id = Matrix::identity(5);
    b.Lambda[0]     = b.E[0] * b.E[1];
    b.Lambda[1]     = b.E[0] - b.Lambda[0];
    b.Lambda[2]     = b.E[1] - b.Lambda[0];
    b.Lambda[3]     = b.E[2] - b.Lambda[0];
    b.Lambda[4]     = id - b.Lambda[0] - b.Lambda[1] - b.Lambda[2] - b.Lambda[3];
    b.LambdaS1      = b.Es[0] * b.Es[1];

    std::map<Gen, Matrix> images;
    for (int i = 1; i <= 3; ++i) {
      images.emplace(gen_a(i), b.A[i - 1]);
      images.emplace(gen_b(i), b.B[i - 1]);
    }
    b.rep = Representation::from_images(std::move(images), params.fixed);
    return b;
  }

  // ---- verification ------------------------------------------------------

  namespace {
    std::optional<std::string> compare(Matrix const& got, Matrix const& want) {
      if (got.dim() != want.dim()) {
        return "dimension " + std::to_string(got.dim()) + " vs "
               + std::to_string(want.dim());
      }
      for (std::size_t i = 0; i < got.dim(); ++i) {
        for (std::size_t j = 0; j < got.dim(); ++j) {
          if (got(i, j) != want(i, j)) {
            return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                   + "): got " + got(i, j).to_string() + ", expected "
                   + want(i, j).to_string();
          }
        }
      }
      return std::nullopt;
    }

    std::string star(bool s) {
      return s ? "E*" : "E";
    }
  }  // namespace

  Report verify_relations_report(Representation const& rep,
                                 RelationSet const&    rels,
                                 EqualityMode const&   mode,
                                 std::string const&    prefix,
                                 std::string const&    anchor) {
    Report r;
    auto   start = std::chrono::steady_clock::now();
    std::vector<ResidualOutcome> outcomes;
    try {
      outcomes = verify_relations(rep, rels, mode);
    } catch (std::exception const& e) {
      r.expect(prefix + "/evaluation", anchor, false,
               std::string("exception: ") + e.what());
      return r;
    }
    std::chrono::duration<double, std::milli> dt
        = std::chrono::steady_clock::now() - start;
    for (auto const& o : outcomes) {
      r.checks.push_back({prefix + "/" + o.name, anchor + " " + o.clause,
                          o.passed, o.detail,
                          dt.count() / static_cast<double>(outcomes.size())});
    }
    return r;
  }

  Report verify_structure(ExampleBundle const& b) {
    Report                  r;
    ExampleParams const&    p  = b.params;
    RationalFunction const  q  = p.value("q");
    Matrix const            id = Matrix::identity(5);
    for (int i = 1; i <= 3; ++i) {
      std::string const k  = std::to_string(i);
      Scalars           a  = scalars(p.value("a" + k), q);
      Scalars           bb = scalars(p.value("b" + k), q);
      Matrix const&     E  = b.E[i - 1];
      Matrix const&     Es = b.Es[i - 1];
      r.check("hexagon/ABEE/A" + k, "Lemma ABEE (AE)", [&] {
        return compare(b.A[i - 1], a.off * E + a.lo * id);
      });
      r.check("hexagon/ABEE/B" + k, "Lemma ABEE (BE)", [&] {
        return compare(b.B[i - 1], bb.off * Es + bb.lo * id);
      });
      r.check("hexagon/ABEE/E" + k + "^2", "Lemma ABEE (EE)",
              [&] { return compare(E * E, E); });
      r.check("hexagon/ABEE/E*" + k + "^2", "Lemma ABEE (EE)",
              [&] { return compare(Es * Es, Es); });
      r.check("hexagon/EE/comm(E" + k + ",E*" + k + ")", "Lemma EE(ii)",
              [&] { return compare(E * Es, Es * E); });
      r.check("hexagon/AAABBBD/A" + k, "Lemma AAABBBD", [&]() -> std::optional<std::string> {
        EigenSystem es = primitive_idempotents(b.A[i - 1], {a.hi, a.lo});
        if (auto d = compare(es.idempotents[0], E)) {
          return "E for a q + 1/(a q): " + *d;
        }
        return compare(es.idempotents[1], id - E);
      });
      r.check("hexagon/AAABBBD/B" + k, "Lemma AAABBBD", [&]() -> std::optional<std::string> {
        EigenSystem es = primitive_idempotents(b.B[i - 1], {bb.hi, bb.lo});
        if (auto d = compare(es.idempotents[0], Es)) {
          return "E* for b q + 1/(b q): " + *d;
        }
        return compare(es.idempotents[1], id - Es);
      });
    }
    RationalFunction const n = p.value("n");
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        std::string const ki = std::to_string(i), kj = std::to_string(j);
        if (i < j) {
          r.check("hexagon/EE/comm(E" + ki + ",E" + kj + ")", "Lemma EE(i)", [&] {
            return compare(b.E[i - 1] * b.E[j - 1], b.E[j - 1] * b.E[i - 1]);
          });
          r.check("hexagon/EE/comm(E*" + ki + ",E*" + kj + ")", "Lemma EE(i)", [&] {
            return compare(b.Es[i - 1] * b.Es[j - 1], b.Es[j - 1] * b.Es[i - 1]);
          });
        }
        if (i != j) {
          r.check("hexagon/EE/nE" + ki + "E*" + kj + "E" + ki, "Lemma EE(iii)", [&] {
            return compare(n * (b.E[i - 1] * b.Es[j - 1] * b.E[i - 1]), b.E[i - 1]);
          });
          r.check("hexagon/EE/nE*" + ki + "E" + kj + "E*" + ki, "Lemma EE(iii)", [&] {
            return compare(n * (b.Es[i - 1] * b.E[j - 1] * b.Es[i - 1]),
                           b.Es[i - 1]);
          });
        }
      }
    }
    return r;
  }

  Report verify_conjugations(ExampleBundle const& b) {
    Report               r;
    ExampleParams const& p = b.params;
    r.check("hexagon/T/inverse", "T display",
            [&] { return compare(b.T_inv, displayed::T_inverse(p)); });
    r.check("hexagon/Ts/inverse", "T* display",
            [&] { return compare(b.Ts_inv, displayed::Ts_inverse(p)); });
    for (int i = 1; i <= 3; ++i) {
      std::string const k = std::to_string(i);
      for (bool s : {false, true}) {
        Matrix const& e = s ? b.Es[i - 1] : b.E[i - 1];
        r.check("hexagon/Tconj/" + star(s) + k, "Lemma Tconj", [&] {
          return compare(b.T * e * b.T_inv,
                         s ? displayed::T_Es(i, p) : displayed::T_E(i, p));
        });
        r.check("hexagon/Tsconj/" + star(s) + k, "Lemma Tsconj", [&] {
          return compare(b.Ts * e * b.Ts_inv,
                         s ? displayed::Ts_Es(i, p) : displayed::Ts_E(i, p));
        });
      }
    }
    for (int i = 1; i <= 5; ++i) {
      r.check("hexagon/TLT/Lambda" + std::to_string(i), "Lemma TLT", [&] {
        return compare(b.T * b.Lambda[i - 1] * b.T_inv, displayed::T_Lambda(i, p));
      });
    }
    r.check("hexagon/ingredient2/LambdaS1", "Lemma ingredient2", [&] {
      return compare(b.T * b.LambdaS1 * b.T_inv, displayed::T_LambdaS1(p));
    });
    return r;
  }

  namespace {
    std::size_t lambda_rank(ExampleBundle const& b) {
      std::vector<Matrix> prods;
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          prods.push_back(b.Lambda[i] * b.LambdaS1 * b.Lambda[j]);
        }
      }
      return rank_of_span(prods);
    }

    std::vector<Matrix> generator_images(ExampleBundle const& b) {
      std::vector<Matrix> out;
      for (Gen g : kStandardGens) {
        out.push_back(b.rep[g]);
      }
      return out;
    }
  }  // namespace

  Report verify_basis_and_irreducibility(ExampleBundle const& b,
                                         std::uint64_t        seed) {
    Report r;
    r.config.emplace_back("closure_seed", std::to_string(seed));
    r.check("hexagon/basis/rank", "Lemma basis(i)",
            [&]() -> std::optional<std::string> {
              std::size_t k = lambda_rank(b);
              if (k == 25) {
                return std::nullopt;
              }
              return "rank " + std::to_string(k);
            });
    for (long nv : {1L, 2L}) {
      r.check("hexagon/basis/rank_n=" + std::to_string(nv), "Lemma basis(i)",
              [&]() -> std::optional<std::string> {
                ExampleParams p = b.params;
                p.fixed.set("n", nv);
                std::size_t k = lambda_rank(build_example(p));
                if (k < 25) {
                  return std::nullopt;
                }
                return "rank " + std::to_string(k) + ", expected < 25";
              });
    }
    for (long nv : {3L, 1L}) {
      r.check("hexagon/closure/n=" + std::to_string(nv),
              "Lemma basis(iii)", [&]() -> std::optional<std::string> {
                EvaluationPoint o;
                o.set("n", nv);
                ExampleParams p = seeded_params(seed, o);
                ClosureResult c
                    = algebra_closure_dimension(generator_images(build_example(p)));
                bool ok = c.stabilized && (nv == 3 ? c.dimension == 25 : c.dimension < 25);
                if (ok) {
                  return std::nullopt;
                }
                return "dimension " + std::to_string(c.dimension)
                       + (c.stabilized ? "" : " (cap exceeded)") + " at "
                       + p.describe();
              });
    }
    return r;
  }

  Report verify_intertwiners(ExampleBundle const& b) {
    Report       r;
    Matrix const id = Matrix::identity(5);
    for (int i = 1; i <= 3; ++i) {
      std::string const k = std::to_string(i);
      for (bool s : {false, true}) {
        AutGenerator g     = s ? AutGenerator::Lstar(i) : AutGenerator::L(i);
        std::string  gname = g.to_string();
        RationalFunction x = b.params.value((s ? "b" : "a") + k);
        Matrix const&    e = s ? b.Es[i - 1] : b.E[i - 1];
        std::optional<IntertwinerData> data;
        std::string                    failure;
        try {
          data = intertwiner_pipeline(b.rep, g);
        } catch (PipelineError const& ex) {
          failure = ex.what();
        }
        r.check("hexagon/Lint/" + gname + "/Psi", s ? "Proposition Lint(ii)"
                                                    : "Proposition Lint(i)",
                [&]() -> std::optional<std::string> {
                  if (!data) {
                    return failure;
                  }
                  return compare(data->psi, (x.inverse() - x) * e + x * id);
                });
        for (Gen xg : kStandardGens) {
          r.check("hexagon/Lint/" + gname + "/" + std::string(gen_name(xg)),
                  "Theorem LPsi", [&]() -> std::optional<std::string> {
                    if (!data) {
                      return failure;
                    }
                    // Recomputed here rather than read from the pipeline.
                    Matrix lhs = data->psi
                                 * b.rep.image_of(generator_image(g).at(xg));
                    return compare(lhs, b.rep[xg] * data->psi);
                  });
        }
        if (!s && i == 1) {
          r.check("hexagon/d1/L1", "Example d1", [&]() -> std::optional<std::string> {
            if (!data) {
              return failure;
            }
            RationalFunction q = b.params.value("q");
            if (data->thetas.size() != 2) {
              return "d = " + std::to_string(data->thetas.size() - 1);
            }
            if (data->thetas[0] != x * q + x.inverse() * q.inverse()) {
              return "theta_0 = " + data->thetas[0].to_string();
            }
            if (data->thetas[1] != x * q.inverse() + x.inverse() * q) {
              return "theta_1 = " + data->thetas[1].to_string();
            }
            if (!data->a || *data->a != x) {
              return "a = " + (data->a ? data->a->to_string() : "none");
            }
            if (data->weights[0] != x.inverse() || data->weights[1] != x) {
              return "t = (" + data->weights[0].to_string() + ", "
                     + data->weights[1].to_string() + ")";
            }
            return compare(data->psi_inv, (x - x.inverse()) * e + x.inverse() * id);
          });
        }
      }
    }
    return r;
  }

  Representation build_tensor_rep(Matrix const& A, Matrix const& B,
                                  TensorVariant          variant,
                                  EvaluationPoint const& point) {
    if (A.dim() != B.dim()) {
      throw DimensionMismatchError("tensor source matrices differ in size");
    }
    Representation pair
        = Representation::from_images({{Gen::A, A}, {Gen::B, B}}, point);
    for (auto const& o : verify_relations(pair, relation_set(AlgebraKind::Oq))) {
      if (!o.passed) {
        throw Error("tensor source pair fails " + o.name + ": " + o.detail);
      }
    }
    std::size_t const     d = A.dim();
    std::map<Gen, Matrix> images;
    images[Gen::A1] = tensor_slot_embed(A, 1, d);
    images[Gen::A2] = tensor_slot_embed(A, 2, d);
    images[Gen::A3] = tensor_slot_embed(A, 3, d);
    if (variant == TensorVariant::OOO) {
      images[Gen::B1] = tensor_slot_embed(B, 2, d);
      images[Gen::B2] = tensor_slot_embed(B, 3, d);
      images[Gen::B3] = tensor_slot_embed(B, 1, d);
    } else {
      images[Gen::B1] = tensor_slot_embed(B, 3, d);
      images[Gen::B2] = tensor_slot_embed(B, 1, d);
      images[Gen::B3] = tensor_slot_embed(B, 2, d);
    }
    return Representation::from_images(std::move(images), point);
  }

}  // namespace qonsager
