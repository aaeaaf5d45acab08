#include "qonsager/representation.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "qonsager/errors.hpp"

namespace qonsager {

  Representation Representation::from_images(std::map<Gen, Matrix> images,
                                             EvaluationPoint       point) {
    if (images.empty()) {
      throw Error("representation needs at least one image");
    }
    std::size_t const n = images.begin()->second.dim();
    for (auto const& [g, m] : images) {
      if (m.dim() != n) {
        throw DimensionMismatchError("image of " + std::string(gen_name(g))
                                     + " is not " + std::to_string(n) + "x"
                                     + std::to_string(n));
      }
    }
    return {n, std::move(images), std::move(point)};
  }

  Matrix const& Representation::operator[](Gen g) const {
    auto it = images.find(g);
    if (it == images.end()) {
      throw Error("representation has no image for "
                  + std::string(gen_name(g)));
    }
    return it->second;
  }

  Matrix Representation::image_of(NCPolynomial const& x) const {
    if (point.assignments.empty()) {
      return substitute(x, images);
    }
    return substitute(
        x.map_coefficients(
            [this](RationalFunction const& c) { return specialize(c, point); }),
        images);
  }

  Representation Representation::evaluate(EvaluationPoint const& pt) const {
    Representation r{dim, {}, point};
    for (auto const& [name, v] : pt.assignments) {
      r.point.set(name, v);
    }
    for (auto const& [g, m] : images) {
      r.images.emplace(g, m.evaluate(r.point));
    }
    return r;
  }

  RationalFunction Representation::q() const {
    return specialize(q_symbol(), point);
  }

  VarMask Representation::variables() const {
    VarMask v = 0;
    for (auto const& [g, m] : images) {
      v |= m.variables();
    }
    return v;
  }

  namespace {
    std::string describe_nonzero(Matrix const& m) {
      auto p = m.first_nonzero();
      if (!p) {
        return {};
      }
      return "entry (" + std::to_string(p->first + 1) + ","
             + std::to_string(p->second + 1)
             + ") = " + m(p->first, p->second).to_string();
    }
  }  // namespace

  EvaluationPoint pole_free_point(VarMask                              vars,
                                  std::vector<RationalFunction> const& guard,
                                  RandomPointGenerator&                rng,
                                  unsigned                             budget) {
    for (unsigned attempt = 0; attempt < budget; ++attempt) {
      EvaluationPoint pt = rng.point(vars);
      bool            ok = true;
      for (auto const& f : guard) {
        if (f.denominator().evaluate(pt) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return pt;
      }
    }
    throw NoPoleFreePointError("no pole-free point found after "
                               + std::to_string(budget) + " attempts");
  }

  std::vector<ResidualOutcome> verify_relations(Representation const& rep,
                                                RelationSet const&    rels,
                                                EqualityMode const&   mode) {
    std::vector<ResidualOutcome> out;
    if (auto const* prob = std::get_if<ProbabilisticEquality>(&mode)) {
      RandomPointGenerator          rng(prob->seed);
      std::vector<RationalFunction> guard;
      for (auto const& [g, m] : rep.images) {
        guard.insert(guard.end(), m.entries().begin(), m.entries().end());
      }
      std::vector<Representation> points;
      std::vector<std::string>    labels;
      VarMask vars = rep.variables() | rep.q().variables();
      for (unsigned t = 0; t < std::max(1U, prob->trials); ++t) {
        points.push_back(rep.evaluate(pole_free_point(vars, guard, rng)));
      }
      for (auto const& r : rels) {
        ResidualOutcome o{r.name, r.clause, true, {}};
        for (std::size_t t = 0; t < points.size(); ++t) {
          Matrix m = points[t].image_of(r.residual);
          if (!m.is_zero()) {
            o.passed = false;
            o.detail = "point " + std::to_string(t) + ": "
                       + describe_nonzero(m);
            break;
          }
        }
        out.push_back(std::move(o));
      }
      return out;
    }
    for (auto const& r : rels) {
      Matrix          m = rep.image_of(r.residual);
      ResidualOutcome o{r.name, r.clause, m.is_zero(), {}};
      if (!o.passed) {
        o.detail = describe_nonzero(m);
      }
      out.push_back(std::move(o));
    }
    return out;
  }

  Representation twist(Representation const&   rep,
                       AutomorphismWord const& w,
                       TableProvider const&    tables) {
    Representation cur = rep;
    for (AutGenerator const& g : w) {
      ImageTable const t = tables(g);
      Representation   next{cur.dim, {}, cur.point};
      for (auto const& [x, m] : cur.images) {
        auto it = t.find(x);
        next.images.emplace(x, it == t.end() ? m : cur.image_of(it->second));
      }
      cur = std::move(next);
    }
    return cur;
  }

  // ---- spectra -----------------------------------------------------------

  std::vector<RationalFunction> triangular_spectrum(Matrix const& m) {
    if (!m.is_upper_triangular() && !m.is_lower_triangular()) {
      throw NotDiagonalizableError(
          "eigenvalues must be supplied for a non-triangular matrix");
    }
    std::vector<RationalFunction> out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (std::find(out.begin(), out.end(), m(i, i)) == out.end()) {
        out.push_back(m(i, i));
      }
    }
    return out;
  }

  EigenSystem primitive_idempotents(
      Matrix const& m, std::vector<RationalFunction> const& eigenvalues) {
    std::size_t const n = m.dim();
    std::size_t const k = eigenvalues.size();
    if (k == 0) {
      throw NotDiagonalizableError("empty spectrum");
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (eigenvalues[i] == eigenvalues[j]) {
          throw NotDiagonalizableError("supplied eigenvalues are not distinct");
        }
      }
    }
    Matrix const        id = Matrix::identity(n);
    std::vector<Matrix> shifted;
    Matrix              annihilator = id;
    for (auto const& th : eigenvalues) {
      shifted.push_back(m - th * id);
      annihilator = annihilator * shifted.back();
    }
    if (!annihilator.is_zero()) {
      throw NotDiagonalizableError(
          "not diagonalizable with the supplied spectrum");
    }
    EigenSystem es{eigenvalues, {}};
    for (std::size_t i = 0; i < k; ++i) {
      Matrix           e = id;
      RationalFunction den(1);
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) {
          e   = e * shifted[j];
          den *= eigenvalues[i] - eigenvalues[j];
        }
      }
      e = e.scaled(den.inverse());
      if (e.is_zero()) {
        throw NotDiagonalizableError("eigenvalue " + eigenvalues[i].to_string()
                                     + " has a zero idempotent");
      }
      es.idempotents.push_back(std::move(e));
    }
    Matrix sum(n), recon(n);
    for (std::size_t i = 0; i < k; ++i) {
      sum   = sum + es.idempotents[i];
      recon = recon + eigenvalues[i] * es.idempotents[i];
      for (std::size_t j = 0; j < k; ++j) {
        Matrix p = es.idempotents[i] * es.idempotents[j];
        if (p != (i == j ? es.idempotents[i] : Matrix(n))) {
          throw NotDiagonalizableError("idempotents are not orthogonal");
        }
      }
    }
    if (sum != id || recon != m) {
      throw NotDiagonalizableError("idempotents do not resolve the matrix");
    }
    return es;
  }

  RationalFunction diagram_polynomial(RationalFunction const& l1,
                                      RationalFunction const& l2,
                                      RationalFunction const& q) {
    RationalFunction c = q.pow(2) - q.pow(-2);
    return l1 * l1 - (q.pow(2) + q.pow(-2)) * l1 * l2 + l2 * l2 + c * c;
  }

  bool DiagramD::adjacent(std::size_t i, std::size_t j) const {
    auto e = std::minmax(i, j);
    return std::find(edges.begin(), edges.end(),
                     std::pair<std::size_t, std::size_t>(e))
           != edges.end();
  }

  std::vector<std::size_t> DiagramD::path_order() const {
    if (shape != DiagramShape::Path) {
      throw NotQRacahPathError(0, "diagram is a " + shape_name(shape)
                                      + ", not a path");
    }
    std::size_t const n = vertices.size();
    std::vector<std::vector<std::size_t>> nbr(n);
    for (auto [i, j] : edges) {
      nbr[i].push_back(j);
      nbr[j].push_back(i);
    }
    std::size_t start = 0;
    while (start < n && nbr[start].size() > 1) {
      ++start;
    }
    std::vector<std::size_t> order = {start};
    std::size_t              prev  = n;
    while (order.size() < n) {
      std::size_t cur = order.back(), next = n;
      for (std::size_t x : nbr[cur]) {
        if (x != prev) {
          next = x;
        }
      }
      prev = cur;
      order.push_back(next);
    }
    return order;
  }

  std::string shape_name(DiagramShape s) {
    switch (s) {
      case DiagramShape::Path:
        return "path";
      case DiagramShape::Cycle:
        return "cycle";
      case DiagramShape::Disconnected:
        break;
    }
    return "disconnected graph";
  }

  DiagramD build_diagram(std::vector<RationalFunction> const& eigenvalues,
                         RationalFunction const&              q) {
    DiagramD          g{eigenvalues, {}, 0, false, DiagramShape::Path};
    std::size_t const n = eigenvalues.size();
    std::vector<std::size_t> degree(n);
    std::vector<std::vector<std::size_t>> nbr(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (diagram_polynomial(eigenvalues[i], eigenvalues[j], q).is_zero()) {
          g.edges.emplace_back(i, j);
          ++degree[i];
          ++degree[j];
          nbr[i].push_back(j);
          nbr[j].push_back(i);
        }
      }
    }
    for (auto d : degree) {
      g.max_degree = std::max(g.max_degree, d);
    }
    std::vector<bool>       seen(n);
    std::deque<std::size_t> todo;
    if (n > 0) {
      todo.push_back(0);
      seen[0] = true;
    }
    std::size_t reached = 0;
    while (!todo.empty()) {
      std::size_t v = todo.front();
      todo.pop_front();
      ++reached;
      for (auto w : nbr[v]) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
    g.connected = reached == n;
    if (g.connected && g.max_degree <= 2 && g.edges.size() + 1 == n) {
      g.shape = DiagramShape::Path;
    } else if (g.connected && g.max_degree == 2 && g.edges.size() == n) {
      g.shape = DiagramShape::Cycle;
    } else {
      g.shape = DiagramShape::Disconnected;
    }
    return g;
  }

  RationalFunction qracah_eigenvalue(RationalFunction const& a, int d, int i,
                                     RationalFunction const& q) {
    return a * q.pow(d - 2 * i) + a.inverse() * q.pow(2 * i - d);
  }

  RationalFunction path_weight(RationalFunction const& a, int d, int i,
                               RationalFunction const& q) {
    return a.pow(2 * i - d) * q.pow(2 * i * (d - i));
  }

  RationalFunction fit_path_parameter(
      std::vector<RationalFunction> const& thetas,
      RationalFunction const&              q) {
    if (thetas.size() < 2) {
      throw NotQRacahPathError(0, "need at least two eigenvalues");
    }
    int const        d   = static_cast<int>(thetas.size()) - 1;
    RationalFunction det = q.pow(2) - q.pow(-2);
    RationalFunction u = (thetas[0] * q.pow(2 - d) - thetas[1] * q.pow(-d)) / det;
    RationalFunction v
        = (thetas[1] * q.pow(d) - thetas[0] * q.pow(d - 2)) / det;
    if (!(u * v).is_one()) {
      throw NotQRacahPathError(1, "u*v = " + (u * v).to_string() + ", not 1");
    }
    RationalFunction s = q.pow(2) + q.pow(-2);
    for (int i = 1; i < d; ++i) {
      if (!(thetas[i - 1] - s * thetas[i] + thetas[i + 1]).is_zero()) {
        throw NotQRacahPathError(i, "three-term recurrence fails");
      }
    }
    for (int i = 0; i <= d; ++i) {
      if (thetas[i] != qracah_eigenvalue(u, d, i, q)) {
        throw NotQRacahPathError(i, "closed form fails");
      }
    }
    RationalFunction a2 = u * u;
    for (int k = d - 1; k >= 1 - d; --k) {
      if (a2 == q.pow(2 * k)) {
        throw NotQRacahPathError(0, "a^2 = q^" + std::to_string(2 * k)
                                        + " is excluded");
      }
    }
    return u;
  }

  RationalFunction tifact_rhs(RationalFunction const& th_i,
                              RationalFunction const& th_j,
                              RationalFunction const& q) {
    RationalFunction qi = q.inverse();
    return 1
           + (th_i - th_j) / (q - qi) * (q * th_i - qi * th_j)
                 / (q.pow(2) - q.pow(-2));
  }

  namespace {
    template <class F>
    auto staged(std::string const& stage, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (PipelineError const&) {
        throw;
      } catch (NotQRacahPathError const& e) {
        throw PipelineError(stage, e.what(), "NotQRacahPathError");
      } catch (NotDiagonalizableError const& e) {
        throw PipelineError(stage, e.what(), "NotDiagonalizableError");
      } catch (Error const& e) {
        throw PipelineError(stage, e.what(), "Error");
      }
    }
  }  // namespace

  IntertwinerData intertwiner_from_spectrum(
      Matrix const&                                       m,
      std::optional<std::vector<RationalFunction>> const& eigenvalues,
      RationalFunction const&                             q) {
    IntertwinerData   data;
    std::size_t const n = m.dim();
    if (m.is_scalar()) {
      data.scalar      = true;
      data.thetas      = {m(0, 0)};
      data.idempotents = {Matrix::identity(n)};
      data.weights     = {RationalFunction(1)};
      data.psi         = Matrix::identity(n);
      data.psi_inv     = Matrix::identity(n);
      return data;
    }
    auto spectrum = staged("eigenvalues", [&] {
      return eigenvalues ? *eigenvalues : triangular_spectrum(m);
    });
    EigenSystem es = staged(
        "idempotents", [&] { return primitive_idempotents(m, spectrum); });
    std::vector<std::size_t> order
        = staged("diagram", [&] { return build_diagram(spectrum, q).path_order(); });
    for (std::size_t k : order) {
      data.thetas.push_back(es.eigenvalues[k]);
      data.idempotents.push_back(es.idempotents[k]);
    }
    data.a = staged("path", [&] { return fit_path_parameter(data.thetas, q); });
    int const d = static_cast<int>(data.thetas.size()) - 1;
    staged("weights", [&] {
      for (int i = 0; i <= d; ++i) {
        data.weights.push_back(path_weight(*data.a, d, i, q));
      }
      for (int i = 0; i < d; ++i) {
        for (auto [x, y] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
          if (data.weights[y] / data.weights[x]
              != tifact_rhs(data.thetas[x], data.thetas[y], q)) {
            throw Error("t_j/t_i ratio identity fails at (" + std::to_string(x)
                        + "," + std::to_string(y) + ")");
          }
        }
      }
      for (int i = 1; i < d; ++i) {
        if (data.thetas[i - 1] + data.thetas[i + 1]
            != (q.pow(2) + q.pow(-2)) * data.thetas[i]) {
          throw Error("neighbour-sum identity fails at vertex "
                      + std::to_string(i));
        }
      }
      return 0;
    });
    staged("intertwiner", [&] {
      data.psi     = Matrix(n);
      data.psi_inv = Matrix(n);
      for (int i = 0; i <= d; ++i) {
        data.psi     = data.psi + data.weights[i] * data.idempotents[i];
        data.psi_inv = data.psi_inv
                       + data.weights[i].inverse() * data.idempotents[i];
      }
      if (data.psi * data.psi_inv != Matrix::identity(n)) {
        throw Error("Psi * Psi^-1 is not the identity");
      }
      return 0;
    });
    return data;
  }

  IntertwinerData intertwiner_pipeline(
      Representation const&                               rep,
      AutGenerator                                        which,
      std::optional<std::vector<RationalFunction>> const& eigenvalues) {
    if (which.index < 1 || which.index > 3 || which.is_inverse()) {
      throw Error("intertwiner_pipeline expects L_i or L*_i");
    }
    int const i      = which.index;
    Gen const source = which.is_starred() ? gen_b(i) : gen_a(i);
    IntertwinerData data = intertwiner_from_spectrum(rep[source], eigenvalues, rep.q());
    data.which           = which;
    data.source          = source;

    staged("zero-block", [&] {
      for (int j = 1; j <= 3; ++j) {
        if (j == i) {
          continue;
        }
        Gen           x  = which.is_starred() ? gen_a(j) : gen_b(j);
        Matrix const& mx = rep[x];
        for (std::size_t k = 0; k < data.idempotents.size(); ++k) {
          for (std::size_t l = 0; l < data.idempotents.size(); ++l) {
            if (k > l + 1 || l > k + 1) {
              if (!(data.idempotents[k] * mx * data.idempotents[l]).is_zero()) {
                throw Error("E_" + std::to_string(k) + " "
                            + std::string(gen_name(x)) + " E_"
                            + std::to_string(l) + " is not zero");
              }
            }
          }
        }
      }
      return 0;
    });

    ImageTable const table = generator_image(which);
    bool             all   = true;
    for (Gen x : kStandardGens) {
      Matrix lhs = data.psi * rep.image_of(table.at(x));
      Matrix rhs = rep[x] * data.psi;
      bool   ok  = lhs == rhs;
      data.conjugation[x] = ok;
      all                 = all && ok;
    }
    if (!all) {
      std::string bad;
      for (auto const& [x, ok] : data.conjugation) {
        if (!ok) {
          bad += (bad.empty() ? "" : ", ") + std::string(gen_name(x));
        }
      }
      throw PipelineError("conjugation", "Psi fails to intertwine " + bad);
    }
    return data;
  }

}  // namespace qonsager
