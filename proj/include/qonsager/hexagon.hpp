#pragma once

// The five-dimensional bbO_q-module built from A^(i), B^(i), its conjugators
// T, T*, the Lambda family, and the tensor-cube representations.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "qonsager/report.hpp"
#include "qonsager/representation.hpp"

namespace qonsager {

  inline constexpr std::array<char const*, 8> kParamNames
      = {"q", "a1", "a2", "a3", "b1", "b2", "b3", "n"};

  // Parameters absent from `fixed` stay symbolic.
  struct ExampleParams {
    EvaluationPoint fixed;

    static ExampleParams symbolic() {
      return {};
    }
    bool is_symbolic() const {
      return fixed.assignments.empty();
    }
    bool is_fully_specialized() const;

    RationalFunction value(std::string const& name) const;
    // Throws ParameterError naming the violated inequality.
    void        validate() const;
    std::string describe() const;
  };

  // All eight parameters as small seeded rationals (numerators in [-50, 50],
  // denominators in [1, 9]) avoiding the excluded values; entries of
  // `overrides` are kept as given.
  ExampleParams seeded_params(std::uint64_t seed, EvaluationPoint const& overrides
                                                  = {});

  // Line-oriented "name = p/q" assignments for all eight keys; '#' starts a
  // comment.
  ExampleParams parse_params(std::string_view text);
  ExampleParams load_params(std::string const& path);

  struct ExampleBundle {
    ExampleParams         params;
    Representation        rep;
    std::array<Matrix, 3> A, B, E, Es;
    Matrix                T, T_inv, Ts, Ts_inv;
    std::array<Matrix, 5> Lambda;
    Matrix                LambdaS1;
  };

  ExampleBundle build_example(ExampleParams const& params);

  // Matrices as displayed alongside the conjugation lemmas, typed
  // independently of the products that should reproduce them.
  namespace displayed {
    Matrix T_inverse(ExampleParams const& p);
    Matrix Ts_inverse(ExampleParams const& p);
    Matrix T_E(int i, ExampleParams const& p);     // T E^(i) T^-1
    Matrix T_Es(int i, ExampleParams const& p);    // T E*^(i) T^-1
    Matrix Ts_E(int i, ExampleParams const& p);    // T* E^(i) T*^-1
    Matrix Ts_Es(int i, ExampleParams const& p);   // T* E*^(i) T*^-1
    Matrix T_Lambda(int i, ExampleParams const& p);
    Matrix T_LambdaS1(ExampleParams const& p);
  }  // namespace displayed

  Report verify_relations_report(Representation const& rep,
                                 RelationSet const&    rels,
                                 EqualityMode const&   mode,
                                 std::string const&    prefix,
                                 std::string const&    anchor);

  Report verify_structure(ExampleBundle const& b);
  Report verify_conjugations(ExampleBundle const& b);
  // Lambda-product rank for the bundle's parameters and at n = 1, 2; closure
  // dimension at n = 3 and n = 1 with the remaining parameters seeded.
  Report verify_basis_and_irreducibility(ExampleBundle const& b,
                                         std::uint64_t        seed);
  Report verify_intertwiners(ExampleBundle const& b);

  enum class TensorVariant { OOO, OOO2 };

  // Rejects (A, B) that fail the q-Dolan/Grady pair.  `point` carries the
  // field parameters already specialized in A and B.
  Representation build_tensor_rep(Matrix const& A, Matrix const& B,
                                  TensorVariant          variant,
                                  EvaluationPoint const& point = {});

}  // namespace qonsager
