#pragma once

// Matrix representations of O_q / bbO_q, relation checking, twisting by
// Lusztig automorphisms, and the spectral intertwiner pipeline.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qonsager/lusztig.hpp"
#include "qonsager/matrix.hpp"

namespace qonsager {

  struct Representation {
    std::size_t           dim = 0;
    std::map<Gen, Matrix> images;
    // Field parameters already specialized in the images; applied to the
    // coefficients of every element passed to image_of.
    EvaluationPoint point;

    static Representation from_images(std::map<Gen, Matrix> images,
                                      EvaluationPoint       point = {});

    Matrix const& operator[](Gen g) const;
    Matrix        image_of(NCPolynomial const& x) const;
    Representation evaluate(EvaluationPoint const& pt) const;
    VarMask        variables() const;
    RationalFunction q() const;
  };

  struct ResidualOutcome {
    std::string name;
    std::string clause;
    bool        passed = false;
    std::string detail;  // set iff !passed
  };

  // Probabilistic mode specializes the images at `trials` seeded pole-free
  // points and checks each residual over Q.
  std::vector<ResidualOutcome> verify_relations(Representation const& rep,
                                                RelationSet const&    rels,
                                                EqualityMode const&   mode
                                                = ExactEquality{});

  // rho o w, so twisted.image_of(X) = rho(w(X)).
  Representation twist(Representation const&   rep,
                       AutomorphismWord const& w,
                       TableProvider const&    tables = generator_image);

  // Seeded point for every variable in `vars`, avoiding poles of `guard`.
  EvaluationPoint pole_free_point(VarMask                              vars,
                                  std::vector<RationalFunction> const& guard,
                                  RandomPointGenerator&                rng,
                                  unsigned budget = 64);

  // ---- spectra -----------------------------------------------------------

  struct EigenSystem {
    std::vector<RationalFunction> eigenvalues;
    std::vector<Matrix>           idempotents;
  };

  // Distinct diagonal entries of a triangular matrix, in order of first
  // appearance.  Throws NotDiagonalizableError for non-triangular input.
  std::vector<RationalFunction> triangular_spectrum(Matrix const& m);

  // Product formula E_i = prod_{j != i} (m - th_j I)/(th_i - th_j); checks
  // that prod (m - th_j I) = 0 and the resolution-of-identity laws.
  EigenSystem primitive_idempotents(
      Matrix const& m, std::vector<RationalFunction> const& eigenvalues);

  // l1^2 - (q^2 + q^-2) l1 l2 + l2^2 + (q^2 - q^-2)^2
  RationalFunction diagram_polynomial(RationalFunction const& l1,
                                      RationalFunction const& l2,
                                      RationalFunction const& q = q_symbol());

  enum class DiagramShape { Path, Cycle, Disconnected };

  struct DiagramD {
    std::vector<RationalFunction>                    vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
    std::size_t                                      max_degree = 0;
    bool                                             connected  = false;
    DiagramShape                                     shape = DiagramShape::Path;

    bool adjacent(std::size_t i, std::size_t j) const;
    // Vertex indices along the path, starting at the endpoint with the
    // smaller index.  Throws NotQRacahPathError unless shape == Path.
    std::vector<std::size_t> path_order() const;
  };

  DiagramD    build_diagram(std::vector<RationalFunction> const& eigenvalues,
                            RationalFunction const&              q = q_symbol());
  std::string shape_name(DiagramShape s);

  // a q^{d-2i} + a^-1 q^{2i-d}
  RationalFunction qracah_eigenvalue(RationalFunction const& a, int d, int i,
                                     RationalFunction const& q = q_symbol());
  // a^{2i-d} q^{2i(d-i)}
  RationalFunction path_weight(RationalFunction const& a, int d, int i,
                               RationalFunction const& q = q_symbol());

  // Linear solve for (a, a^-1) from th_0, th_1, validated against the whole
  // sequence.  Throws NotQRacahPathError naming the failing index.
  RationalFunction fit_path_parameter(
      std::vector<RationalFunction> const& thetas,
      RationalFunction const&              q = q_symbol());

  // 1 + (th_i - th_j)/(q - q^-1) * (q th_i - q^-1 th_j)/(q^2 - q^-2)
  RationalFunction tifact_rhs(RationalFunction const& th_i,
                              RationalFunction const& th_j,
                              RationalFunction const& q = q_symbol());

  struct IntertwinerData {
    AutGenerator                  which;
    bool                          scalar = false;  // d = 0 short circuit
    Gen                           source = Gen::A1;
    std::vector<RationalFunction> thetas;  // in path order
    std::vector<Matrix>           idempotents;
    std::optional<RationalFunction> a;
    std::vector<RationalFunction>   weights;
    Matrix                          psi;
    Matrix                          psi_inv;
    std::map<Gen, bool>             conjugation;  // Psi rho(L(X)) = rho(X) Psi
  };

  // Spectral stages on a single matrix: idempotents, diagram, path, a,
  // weights, Psi.  Errors are rethrown as PipelineError with the stage.
  IntertwinerData intertwiner_from_spectrum(
      Matrix const&                                       m,
      std::optional<std::vector<RationalFunction>> const& eigenvalues
      = std::nullopt,
      RationalFunction const& q = q_symbol());

  // Full pipeline for L_i (source A_i) or L*_i (source B_i): spectral
  // stages, the zero-block precondition, tiFact / ijk identities, and the
  // conjugation check for all six generators.
  IntertwinerData intertwiner_pipeline(
      Representation const&                               rep,
      AutGenerator                                        which,
      std::optional<std::vector<RationalFunction>> const& eigenvalues
      = std::nullopt);

}  // namespace qonsager
