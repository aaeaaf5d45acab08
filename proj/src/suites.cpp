#include "qonsager/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace qonsager {

  namespace {

    std::optional<std::string> compare(Matrix const& got, Matrix const& want) {
      if (got == want) {
        return std::nullopt;
      }
      Matrix d = got - want;
      auto   p = d.first_nonzero();
      return "differs at (" + std::to_string(p->first + 1) + ","
             + std::to_string(p->second + 1) + ")";
    }

    std::optional<std::string> expect_throw(std::function<void()> const& f,
                                            std::string const& stage,
                                            std::string const& cause) {
      try {
        f();
      } catch (PipelineError const& e) {
        if (e.stage() == stage && (cause.empty() || e.cause() == cause)) {
          return std::nullopt;
        }
        return "wrong error: " + std::string(e.what()) + " [" + e.cause() + "]";
      }
      return "no error raised";
    }

    RationalFunction random_rf(std::mt19937_64& rng) {
      std::uniform_int_distribution<int> c(-6, 6), e(0, 2);
      RationalFunction const q = q_symbol(), x = RationalFunction::variable("x");
      auto poly = [&] {
        return RationalFunction(c(rng)) * q.pow(e(rng)) + RationalFunction(c(rng)) * x.pow(e(rng))
               + RationalFunction(c(rng));
      };
      RationalFunction den = poly();
      while (den.is_zero()) {
        den = poly();
      }
      return poly() / den;
    }

    Report scalars_suite(SuiteConfig const& cfg) {
      Report          r;
      std::mt19937_64 rng(cfg.effective_seed());
      std::vector<RationalFunction> xs;
      for (int k = 0; k < 12; ++k) {
        xs.push_back(random_rf(rng));
      }
      r.check("scalars/field/commutative", "field axioms", [&]() -> std::optional<std::string> {
        for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
          if (xs[k] * xs[k + 1] != xs[k + 1] * xs[k] || xs[k] + xs[k + 1] != xs[k + 1] + xs[k]) {
            return "sample " + std::to_string(k);
          }
        }
        return std::nullopt;
      });
      r.check("scalars/field/distributive", "field axioms", [&]() -> std::optional<std::string> {
        for (std::size_t k = 0; k + 2 < xs.size(); ++k) {
          auto const &f = xs[k], &g = xs[k + 1], &h = xs[k + 2];
          if (f * (g + h) != f * g + f * h || (f * g) * h != f * (g * h)) {
            return "sample " + std::to_string(k);
          }
        }
        return std::nullopt;
      });
      r.check("scalars/field/inverse", "field axioms", [&]() -> std::optional<std::string> {
        for (auto const& f : xs) {
          if (!f.is_zero() && !(f * f.inverse()).is_one()) {
            return f.to_string();
          }
        }
        return std::nullopt;
      });
      r.check("scalars/parse-roundtrip", "canonical form", [&]() -> std::optional<std::string> {
        for (auto const& f : xs) {
          if (RationalFunction::parse(f.to_string()) != f) {
            return f.to_string();
          }
        }
        return std::nullopt;
      });
      r.check("scalars/qbracket", "q-bracket", [&]() -> std::optional<std::string> {
        RationalFunction const q = q_symbol();
        for (unsigned m = 1; m <= 5; ++m) {
          RationalFunction sum;
          for (unsigned k = 0; k < m; ++k) {
            sum += q.pow(static_cast<long>(m) - 1 - 2 * static_cast<long>(k));
          }
          if (qbracket(m) != sum) {
            return "m = " + std::to_string(m);
          }
        }
        return std::nullopt;
      });
      r.check("scalars/probabilistic-equality", "Schwartz-Zippel", [&]() -> std::optional<std::string> {
        ProbabilisticEquality mode{cfg.effective_seed(), cfg.trials};
        RationalFunction const q = q_symbol();
        if (!equals((q - q.inverse()) * qbracket(3), q.pow(3) - q.pow(-3), mode)) {
          return "identity rejected";
        }
        if (equals(q.pow(2), q.pow(2) + 1, mode)) {
          return "non-identity accepted";
        }
        return std::nullopt;
      });
      return r;
    }

    Report free_algebra_suite() {
      Report      r;
      RelationSet bb = relation_set(AlgebraKind::bbOq);
      RelationSet oq = relation_set(AlgebraKind::Oq);
      r.check("free-algebra/relations/count", "Definition bbO", [&]() -> std::optional<std::string> {
        if (bb.size() != 21 || oq.size() != 2) {
          return std::to_string(bb.size()) + " and " + std::to_string(oq.size());
        }
        std::set<std::string> names;
        for (auto const& x : bb) {
          names.insert(x.name);
        }
        if (names.size() != bb.size()) {
          return "duplicate relation names";
        }
        return std::nullopt;
      });
      r.check("free-algebra/qdg/swap", "Example Oq", [&]() -> std::optional<std::string> {
        auto swap = [](Gen g) { return g == Gen::A ? Gen::B : Gen::A; };
        if (oq[0].residual.rename(swap) != oq[1].residual) {
          return "qdg(A,B) does not swap to qdg(B,A)";
        }
        return std::nullopt;
      });
      r.check("free-algebra/qdg/expansion", "Example Oq", [&]() -> std::optional<std::string> {
        // A^3 B - [3] A^2 B A + [3] A B A^2 - B A^3 - (q^2 - q^-2)^2 (BA - AB)
        RationalFunction const q = q_symbol();
        NCPolynomial const     a = Gen::A, b = Gen::B;
        RationalFunction const c = (q.pow(2) - q.pow(-2)).pow(2);
        NCPolynomial want = a * a * a * b - qbracket(3) * (a * a * b * a)
                            + qbracket(3) * (a * b * a * a) - b * a * a * a
                            - c * (b * a - a * b);
        if (oq[0].residual != want) {
          return "got " + oq[0].residual.to_string();
        }
        return std::nullopt;
      });
      r.check("free-algebra/dihedral", "Definition bbO", [&]() -> std::optional<std::string> {
        for (auto const& g : dihedral_group()) {
          for (auto const& x : bb) {
            NCPolynomial y  = x.residual.rename([&](Gen h) { return dihedral_act(g, h); });
            bool         ok = std::any_of(bb.begin(), bb.end(), [&](Relation const& s) {
              return s.residual == y || s.residual == -y;
            });
            if (!ok) {
              return x.name + " leaves the set";
            }
          }
        }
        return std::nullopt;
      });
      return r;
    }

    Report lusztig_suite() {
      Report r;
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (i == j) {
            continue;
          }
          r.check("lusztig/injera/(" + std::to_string(i) + "," + std::to_string(j) + ")",
                  "Lemma Injera", [&]() -> std::optional<std::string> {
                    if (injera_check(i, j)) {
                      return std::nullopt;
                    }
                    return "sigma o L differs from L_i o sigma";
                  });
        }
      }
      r.check("lusztig/L1/B2", "Theorem main1", [&]() -> std::optional<std::string> {
        RationalFunction den = RationalFunction::parse("(q - 1/q)*(q^2 - 1/q^2)");
        NCPolynomial     a = Gen::A1, b = Gen::B2;
        NCPolynomial     want = b + (RationalFunction::parse("q") / den) * (a * a * b)
                            + (RationalFunction::parse("-(q + 1/q)") / den) * (a * b * a)
                            + (RationalFunction::parse("1/q") / den) * (b * a * a);
        NCPolynomial got = generator_image(AutGenerator::L(1)).at(Gen::B2);
        if (got != want) {
          return "got " + got.to_string();
        }
        return std::nullopt;
      });
      r.check("lusztig/inverse-is-q-inversion", "Theorem main1", [&]() -> std::optional<std::string> {
        auto flip = [](RationalFunction const& c) {
          return c.substitute("q", q_symbol().inverse());
        };
        for (int i = 0; i <= 3; ++i) {
          for (auto g : {AutGenerator::L(i), AutGenerator::Lstar(i)}) {
            ImageTable fwd = generator_image(g), back = generator_image(g.inverse());
            for (auto const& [x, img] : fwd) {
              if (img.map_coefficients(flip) != back.at(x)) {
                return g.to_string() + " on " + std::string(gen_name(x));
              }
            }
          }
        }
        return std::nullopt;
      });
      r.check("lusztig/reduced-words", "free group words", [&]() -> std::optional<std::string> {
        auto w = reduced_words(AutGenerator::L(1), AutGenerator::Lstar(2), 3);
        if (w.size() != 53) {
          return std::to_string(w.size()) + " words";
        }
        return std::nullopt;
      });
      return r;
    }

    Report rep_pipeline_suite(ExampleBundle const& b) {
      Report r = verify_formula_identities(5);
      r.merge(verify_diagram_identities());
      r.check("rep-pipeline/scalar-Psi", "scalar case", [&]() -> std::optional<std::string> {
        Representation rep = b.rep;
        rep.images[Gen::A1] = Matrix::identity(5).scaled(RationalFunction(3));
        IntertwinerData d   = intertwiner_pipeline(rep, AutGenerator::L(1));
        if (!d.scalar || d.psi != Matrix::identity(5)) {
          return "Psi is not the identity";
        }
        return std::nullopt;
      });
      r.merge(verify_robustness(b));
      return r;
    }

    Report hexagon_suite(ExampleBundle const& b, SuiteConfig const& cfg) {
      EqualityMode mode = ExactEquality{};
      if (cfg.probabilistic) {
        mode = ProbabilisticEquality{*cfg.seed, cfg.trials};
      }
      Report r = verify_relations_report(b.rep, relation_set(AlgebraKind::bbOq), mode,
                                         "hexagon/relations", "Proposition OQM");
      r.merge(verify_structure(b));
      r.merge(verify_conjugations(b));
      r.merge(verify_basis_and_irreducibility(b, cfg.effective_seed()));
      r.merge(verify_intertwiners(b));
      r.merge(verify_commutation(b));
      return r;
    }

    ExampleParams configured_params(SuiteConfig const& cfg) {
      return cfg.params_file ? load_params(*cfg.params_file) : ExampleParams::symbolic();
    }

    // Specialized parameters: the file when given, otherwise seeded.
    ExampleParams specialized_params(SuiteConfig const& cfg) {
      return cfg.params_file ? load_params(*cfg.params_file)
                             : seeded_params(cfg.effective_seed());
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {
        "scalars", "free-algebra", "lusztig", "rep-pipeline",
        "hexagon", "tensor",       "evidence", "all"};
    return names;
  }

  void validate(SuiteConfig const& c) {
    auto const& n = suite_names();
    if (std::find(n.begin(), n.end(), c.suite) == n.end()) {
      throw UsageError("unknown suite '" + c.suite + "'");
    }
    if (c.probabilistic && !c.seed) {
      throw UsageError("probabilistic mode requires --seed");
    }
    if (c.probabilistic && c.trials == 0) {
      throw UsageError("probabilistic mode requires at least one trial");
    }
    if ((c.suite == "evidence" || c.suite == "all") && c.word_length < 1) {
      throw UsageError("evidence suite requires word length >= 1");
    }
  }

  Report verify_commutation(ExampleBundle const& b) {
    Report     r;
    auto const L  = AutGenerator::L;
    auto const Ls = AutGenerator::Lstar;
    std::vector<std::pair<AutomorphismWord, AutomorphismWord>> pairs;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      pairs.push_back({{L(i), L(j)}, {L(j), L(i)}});
    }
    for (int i = 1; i <= 3; ++i) {
      pairs.push_back({{L(i), Ls(i)}, {Ls(i), L(i)}});
    }
    for (auto const& [u, v] : pairs) {
      std::string const name = "hexagon/SixLA/" + word_to_string(u) + "=" + word_to_string(v);
      std::string const anchor = u[1].is_starred() ? "Theorem SixLA(ii)" : "Theorem SixLA(i)";
      Representation    ru = twist(b.rep, u), rv = twist(b.rep, v);
      for (Gen x : kStandardGens) {
        r.check(name + "/" + std::string(gen_name(x)), anchor,
                [&] { return compare(ru[x], rv[x]); });
      }
    }
    return r;
  }

  Report verify_free_generation(ExampleBundle const& b, int word_length) {
    Report r;
    auto   words = reduced_words(AutGenerator::L(1), AutGenerator::Lstar(2), word_length);
    r.config.emplace_back("evidence_words", std::to_string(words.size()));
    std::string const anchor = "Theorem SixLA(iii) (evidence only)";
    std::map<std::string, std::string> seen;
    std::vector<std::string>           clashes;
    for (auto const& w : words) {
      Representation t = twist(b.rep, w);
      std::string    key;
      for (Gen x : kStandardGens) {
        key += t[x].to_string() + ";";
      }
      auto [it, fresh] = seen.emplace(key, word_to_string(w));
      if (!fresh) {
        clashes.push_back(it->second + " ~ " + word_to_string(w));
      }
    }
    r.expect("evidence/pairwise-distinct/length<=" + std::to_string(word_length), anchor,
             clashes.empty(),
             clashes.empty() ? "" : std::to_string(clashes.size()) + " coincidences, first "
                                        + clashes.front());
    std::size_t expected = 1, layer = 4;
    for (int k = 1; k <= word_length; ++k, layer *= 3) {
      expected += layer;
    }
    r.expect("evidence/word-count", "free group words", words.size() == expected,
             std::to_string(words.size()) + " words, expected " + std::to_string(expected));
    return r;
  }

  Report verify_tensor(ExampleBundle const& b, EqualityMode const& mode) {
    Report r;
    for (auto v : {TensorVariant::OOO, TensorVariant::OOO2}) {
      std::string const tag    = v == TensorVariant::OOO ? "OOO" : "OOO2";
      std::string const anchor = "Lemma " + tag;
      Representation    rep;
      try {
        rep = build_tensor_rep(b.A[0], b.B[1], v, b.params.fixed);
      } catch (std::exception const& e) {
        r.expect("tensor/" + tag + "/build", anchor, false, e.what());
        continue;
      }
      r.merge(verify_relations_report(rep, relation_set(AlgebraKind::bbOq), mode,
                                      "tensor/" + tag, anchor));
      r.check("tensor/" + tag + "/rank", "Corollary AAABBB", [&]() -> std::optional<std::string> {
        std::vector<Matrix> ms = {Matrix::identity(rep.dim)};
        for (Gen g : kStandardGens) {
          ms.push_back(rep[g]);
        }
        std::size_t k = rank_of_span(ms);
        if (k == 7) {
          return std::nullopt;
        }
        return "rank " + std::to_string(k);
      });
    }
    return r;
  }

  Report verify_formula_identities(int max_d) {
    Report                 r;
    RationalFunction const q = q_symbol(), a = RationalFunction::variable("a");
    RationalFunction const s = q.pow(2) + q.pow(-2);
    for (int d = 1; d <= max_d; ++d) {
      std::string const k = "/d=" + std::to_string(d);
      std::vector<RationalFunction> th, t;
      for (int i = 0; i <= d; ++i) {
        th.push_back(a * q.pow(d - 2 * i) + a.inverse() * q.pow(2 * i - d));
        t.push_back(a.pow(2 * i - d) * q.pow(2 * i * (d - i)));
      }
      r.check("rep-pipeline/recurrence" + k, "Lemma Path", [&]() -> std::optional<std::string> {
        for (int i = 1; i < d; ++i) {
          if (!(th[i - 1] - s * th[i] + th[i + 1]).is_zero()) {
            return "i = " + std::to_string(i);
          }
        }
        return std::nullopt;
      });
      r.check("rep-pipeline/ijk" + k, "Lemma ijk", [&]() -> std::optional<std::string> {
        for (int i = 1; i < d; ++i) {
          if (th[i - 1] + th[i + 1] != s * th[i]) {
            return "i = " + std::to_string(i);
          }
        }
        return std::nullopt;
      });
      r.check("rep-pipeline/tiFact" + k, "Lemma tiFact", [&]() -> std::optional<std::string> {
        for (int i = 0; i < d; ++i) {
          if (t[i + 1] / t[i] != tifact_rhs(th[i], th[i + 1])
              || t[i] / t[i + 1] != tifact_rhs(th[i + 1], th[i])) {
            return "i = " + std::to_string(i);
          }
        }
        return std::nullopt;
      });
      r.check("rep-pipeline/P-edges" + k, "Definition Poly", [&]() -> std::optional<std::string> {
        DiagramD g = build_diagram(th);
        if (g.shape != DiagramShape::Path || g.edges.size() != static_cast<std::size_t>(d)) {
          return "diagram is a " + shape_name(g.shape);
        }
        return std::nullopt;
      });
      r.check("rep-pipeline/fit-path" + k, "Lemma Path", [&]() -> std::optional<std::string> {
        RationalFunction u = fit_path_parameter(th);
        for (int i = 0; i <= d; ++i) {
          if (qracah_eigenvalue(u, d, i) != th[i]) {
            return "closed form fails at " + std::to_string(i);
          }
        }
        return std::nullopt;
      });
      r.check("rep-pipeline/orientation" + k, "Lemma Path", [&]() -> std::optional<std::string> {
        std::size_t const n = th.size();
        Matrix            u = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            u(i, j) = RationalFunction(1);
          }
        }
        Matrix m = u * Matrix::diagonal(th) * inverse(u);
        std::vector<RationalFunction> rev(th.rbegin(), th.rend());
        IntertwinerData fwd  = intertwiner_from_spectrum(m, th);
        IntertwinerData back = intertwiner_from_spectrum(m, rev);
        if (*fwd.a != a || *back.a != a.inverse()) {
          return "a is not inverted by the reversal";
        }
        return compare(back.psi, fwd.psi);
      });
    }
    return r;
  }

  Report verify_diagram_identities() {
    Report                 r;
    RationalFunction const x = RationalFunction::variable("x"), y = RationalFunction::variable("y");
    r.check("rep-pipeline/P-symmetry", "Definition Poly", [&]() -> std::optional<std::string> {
      if (diagram_polynomial(x, y) != diagram_polynomial(y, x)) {
        return "P(x, y) != P(y, x)";
      }
      return std::nullopt;
    });
    r.check("rep-pipeline/diagram/no-edge", "Definition diagram", [&]() -> std::optional<std::string> {
      if (!build_diagram({x, x + 1}).edges.empty()) {
        return "unexpected edge";
      }
      return std::nullopt;
    });
    return r;
  }

  Report verify_robustness(ExampleBundle const& b) {
    Report r;
    r.check("robust/perturbed-relations", "negative control", [&]() -> std::optional<std::string> {
      Representation rep = b.rep;
      Matrix         a1  = rep[Gen::A1];
      a1(0, 0)           = a1(0, 0) + 1;
      rep.images[Gen::A1] = a1;
      for (auto const& o : verify_relations(rep, relation_set(AlgebraKind::bbOq))) {
        if (!o.passed) {
          return std::nullopt;
        }
      }
      return "every residual still vanishes";
    });
    RationalFunction const a = RationalFunction::variable("a"), z = RationalFunction::variable("z");
    RationalFunction const q = q_symbol();
    r.check("robust/wrong-eigenvalues", "negative control", [&] {
      return expect_throw(
          [&] {
            intertwiner_pipeline(b.rep, AutGenerator::L(1),
                                 std::vector<RationalFunction>{b.A[0](0, 0), z});
          },
          "idempotents", "NotDiagonalizableError");
    });
    r.check("robust/non-path-spectrum", "negative control", [&] {
      std::vector<RationalFunction> th = {a * q + (a * q).inverse(), a / q + q / a, z};
      return expect_throw([&] { intertwiner_from_spectrum(Matrix::diagonal(th), th); },
                          "diagram", "NotQRacahPathError");
    });
    r.check("robust/unrelated-pair", "negative control", [&]() -> std::optional<std::string> {
      try {
        fit_path_parameter({z, RationalFunction::variable("w")});
      } catch (NotQRacahPathError const&) {
        return std::nullopt;
      }
      return "accepted";
    });
    r.check("robust/excluded-a", "Example d1", [&]() -> std::optional<std::string> {
      try {
        fit_path_parameter({q + q.inverse(), q.inverse() + q});
      } catch (NotQRacahPathError const&) {
        return std::nullopt;
      }
      return "a^2 = 1 accepted";
    });
    return r;
  }

  Report run_suite(SuiteConfig const& cfg) {
    validate(cfg);
    Report r;
    r.suite = cfg.suite;
    r.config.emplace_back("mode", cfg.probabilistic ? "prob" : "exact");
    r.config.emplace_back("seed", cfg.seed ? std::to_string(*cfg.seed)
                                           : std::to_string(cfg.effective_seed()) + " (default)");
    if (cfg.probabilistic) {
      r.config.emplace_back("trials", std::to_string(cfg.trials));
    }
    r.config.emplace_back("params", cfg.params_file ? *cfg.params_file : "symbolic");
    bool const all = cfg.suite == "all";
    auto       want = [&](char const* s) { return all || cfg.suite == s; };

    if (want("scalars")) {
      r.merge(scalars_suite(cfg));
    }
    if (want("free-algebra")) {
      r.merge(free_algebra_suite());
    }
    if (want("lusztig")) {
      r.merge(lusztig_suite());
    }
    if (want("rep-pipeline") || want("hexagon")) {
      ExampleBundle b = build_example(configured_params(cfg));
      r.config.emplace_back("example_params", b.params.describe());
      if (want("rep-pipeline")) {
        r.merge(rep_pipeline_suite(b));
      }
      if (want("hexagon")) {
        r.merge(hexagon_suite(b, cfg));
      }
    }
    if (want("tensor") || want("evidence")) {
      ExampleBundle b = build_example(specialized_params(cfg));
      r.config.emplace_back("specialized_params", b.params.describe());
      if (want("tensor")) {
        EqualityMode mode = ExactEquality{};
        if (cfg.probabilistic) {
          mode = ProbabilisticEquality{*cfg.seed, cfg.trials};
        }
        r.merge(verify_tensor(b, mode));
      }
      if (want("evidence")) {
        r.config.emplace_back("word_length", std::to_string(cfg.word_length));
        r.merge(verify_free_generation(b, cfg.word_length));
      }
    }
    r.sort();
    return r;
  }

}  // namespace qonsager
