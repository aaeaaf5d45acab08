#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qonsager/suites.hpp"

namespace py = pybind11;
using namespace qonsager;

namespace {

  // Values may be ints, strings "p/q" or fractions.Fraction.
  EvaluationPoint to_point(py::dict const& d) {
    EvaluationPoint pt;
    for (auto const& [k, v] : d) {
      mpq_class x;
      if (x.set_str(py::str(v).cast<std::string>(), 10) != 0 || x.get_den() == 0) {
        throw ParseError("bad rational for '" + k.cast<std::string>() + "'");
      }
      x.canonicalize();
      pt.set(k.cast<std::string>(), x);
    }
    return pt;
  }

  py::dict from_point(EvaluationPoint const& pt) {
    py::dict d;
    for (auto const& [k, v] : pt.assignments) {
      d[py::str(k)] = v.get_str();
    }
    return d;
  }

  ExampleParams to_params(std::optional<py::dict> const& d) {
    ExampleParams p;
    if (d) {
      p.fixed = to_point(*d);
    }
    return p;
  }

  py::dict report_dict(Report const& r) {
    py::list checks;
    Report   sorted = r;
    sorted.sort();
    for (auto const& c : sorted.checks) {
      py::dict e;
      e["name"]   = c.name;
      e["anchor"] = c.anchor;
      e["status"] = c.passed ? "pass" : "fail";
      if (!c.passed) {
        e["detail"] = c.detail;
      }
      checks.append(e);
    }
    py::dict config;
    for (auto const& [k, v] : r.config) {
      config[py::str(k)] = v;
    }
    py::dict out;
    out["suite"]   = r.suite;
    out["config"]  = config;
    out["checks"]  = checks;
    out["summary"] = py::dict(py::arg("total") = r.checks.size(), py::arg("passed") = r.passed(),
                              py::arg("failed") = r.failed());
    return out;
  }

  AutGenerator parse_generator(std::string const& s) {
    return AutGenerator::parse(s);
  }

}  // namespace

PYBIND11_MODULE(_qonsager, m) {
  m.doc() = "Exact symbolic toolkit for the S3-symmetric q-Onsager algebra";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);
  py::register_exception<PipelineError>(m, "PipelineError");
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<RationalFunction>(m, "RationalFunction")
      .def(py::init([](std::string const& s) { return RationalFunction::parse(s); }), py::arg("text"))
      .def(py::init<long>())
      .def_static("variable", &RationalFunction::variable)
      .def("is_zero", &RationalFunction::is_zero)
      .def("inverse", &RationalFunction::inverse)
      .def("evaluate",
           [](RationalFunction const& f, py::dict const& pt) {
             return f.evaluate(to_point(pt)).get_str();
           })
      .def("substitute",
           [](RationalFunction const& f, std::string const& var, RationalFunction const& v) {
             return f.substitute(var, v);
           })
      .def("__pow__", [](RationalFunction const& f, long e) { return f.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__hash__", [](RationalFunction const& f) { return py::hash(py::str(f.to_string())); })
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__",
           [](RationalFunction const& f) { return "RationalFunction('" + f.to_string() + "')"; });

  py::class_<Matrix>(m, "Matrix")
      .def(py::init(&Matrix::parse_rows), py::arg("rows"))
      .def_static("identity", &Matrix::identity)
      .def_property_readonly("dim", &Matrix::dim)
      .def("__getitem__",
           [](Matrix const& x, std::pair<std::size_t, std::size_t> ij) {
             if (ij.first >= x.dim() || ij.second >= x.dim()) {
               throw py::index_error();
             }
             return x(ij.first, ij.second);
           })
      .def("rows", &Matrix::to_rows)
      .def("is_zero", &Matrix::is_zero)
      .def("transpose", &Matrix::transpose)
      .def("inverse", [](Matrix const& x) { return inverse(x); })
      .def("determinant", [](Matrix const& x) { return determinant(x); })
      .def("evaluate", [](Matrix const& x, py::dict const& pt) { return x.evaluate(to_point(pt)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &Matrix::to_string);

  m.def("kronecker", &kronecker);
  m.def("rank_of_span", &rank_of_span);
  m.def("closure_dimension", [](std::vector<Matrix> const& ms) {
    ClosureResult r = algebra_closure_dimension(ms);
    return py::make_tuple(r.dimension, r.stabilized);
  });

  m.def("relation_names", [](std::string const& kind) {
    if (kind != "bbOq" && kind != "Oq") {
      throw py::value_error("kind must be 'bbOq' or 'Oq'");
    }
    std::vector<std::string> out;
    for (auto const& r : relation_set(kind == "Oq" ? AlgebraKind::Oq : AlgebraKind::bbOq)) {
      out.push_back(r.name);
    }
    return out;
  }, py::arg("kind") = "bbOq");

  m.def("injera_check", [](int i, int j) { return injera_check(i, j); });
  m.def("reduced_words", [](std::string const& x, std::string const& y, int n) {
    std::vector<std::string> out;
    for (auto const& w : reduced_words(parse_generator(x), parse_generator(y), n)) {
      out.push_back(word_to_string(w));
    }
    return out;
  });

  m.def("seeded_params", [](std::uint64_t seed) { return from_point(seeded_params(seed).fixed); });

  py::class_<ExampleBundle>(m, "Example")
      .def_property_readonly("params", [](ExampleBundle const& b) { return from_point(b.params.fixed); })
      .def("image", [](ExampleBundle const& b, std::string const& g) {
        auto gen = parse_gen(g);
        if (!gen) {
          throw py::value_error("unknown generator '" + g + "'");
        }
        return b.rep[*gen];
      })
      .def_property_readonly("A", [](ExampleBundle const& b) { return std::vector<Matrix>(b.A.begin(), b.A.end()); })
      .def_property_readonly("B", [](ExampleBundle const& b) { return std::vector<Matrix>(b.B.begin(), b.B.end()); })
      .def_property_readonly("E", [](ExampleBundle const& b) { return std::vector<Matrix>(b.E.begin(), b.E.end()); })
      .def_property_readonly("Es", [](ExampleBundle const& b) { return std::vector<Matrix>(b.Es.begin(), b.Es.end()); })
      .def_readonly("T", &ExampleBundle::T)
      .def_readonly("Ts", &ExampleBundle::Ts)
      .def("verify_relations",
           [](ExampleBundle const& b, std::optional<std::uint64_t> seed, unsigned trials) {
             EqualityMode mode = ExactEquality{};
             if (seed) {
               mode = ProbabilisticEquality{*seed, trials};
             }
             std::map<std::string, bool> out;
             for (auto const& o : verify_relations(b.rep, relation_set(AlgebraKind::bbOq), mode)) {
               out[o.name] = o.passed;
             }
             return out;
           },
           py::arg("seed") = py::none(), py::arg("trials") = 8)
      .def("intertwiner",
           [](ExampleBundle const& b, std::string const& which) {
             IntertwinerData d = intertwiner_pipeline(b.rep, AutGenerator::parse(which));
             py::dict        out;
             out["thetas"]  = d.thetas;
             out["weights"] = d.weights;
             out["a"]       = d.a ? py::cast(*d.a) : py::none();
             out["psi"]     = d.psi;
             out["psi_inv"] = d.psi_inv;
             return out;
           })
      .def("twist", [](ExampleBundle const& b, std::string const& word) {
        Representation t = twist(b.rep, parse_word(word));
        std::map<std::string, Matrix> out;
        for (Gen g : kStandardGens) {
          out.emplace(std::string(gen_name(g)), t[g]);
        }
        return out;
      });

  m.def("build_example", [](std::optional<py::dict> const& p) { return build_example(to_params(p)); },
        py::arg("params") = py::none());

  m.def("run_suite",
        [](std::string const& suite, std::string const& mode, std::optional<std::uint64_t> seed,
           unsigned trials, std::optional<std::string> params_file, int word_length) {
          if (mode != "exact" && mode != "prob") {
            throw UsageError("mode must be 'exact' or 'prob'");
          }
          SuiteConfig c;
          c.suite         = suite;
          c.probabilistic = mode == "prob";
          c.seed          = seed;
          c.trials        = trials;
          c.params_file   = std::move(params_file);
          c.word_length   = word_length;
          return report_dict(run_suite(c));
        },
        py::arg("suite") = "all", py::arg("mode") = "exact", py::arg("seed") = py::none(),
        py::arg("trials") = 8, py::arg("params_file") = py::none(), py::arg("word_length") = 3);
}
