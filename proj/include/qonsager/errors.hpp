#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qonsager {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DivisionByZeroError : public Error {
   public:
    DivisionByZeroError() : Error("division by zero") {}
  };

  // A denominator vanished while specializing a rational function.
  class PoleError : public Error {
   public:
    using Error::Error;
  };

  class NoPoleFreePointError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatchError : public Error {
   public:
    using Error::Error;
  };

  class SingularMatrixError : public Error {
   public:
    SingularMatrixError() : Error("matrix is singular") {}
  };

  class NotDiagonalizableError : public Error {
   public:
    using Error::Error;
  };

  // Raised when an eigenvalue sequence is not of the form
  // a q^{d-2i} + a^{-1} q^{2i-d}.
  class NotQRacahPathError : public Error {
   public:
    NotQRacahPathError(std::size_t index, std::string const& why)
        : Error("not a q-Racah path at index " + std::to_string(index) + ": "
                + why),
          index_(index) {}

    std::size_t index() const noexcept {
      return index_;
    }

   private:
    std::size_t index_;
  };

  // Wraps the failure of one intertwiner-pipeline stage.  `cause` names the
  // wrapped error class, e.g. "NotQRacahPathError".
  class PipelineError : public Error {
   public:
    PipelineError(std::string stage, std::string const& what,
                  std::string cause = "Error")
        : Error(stage + ": " + what),
          stage_(std::move(stage)),
          cause_(std::move(cause)) {}

    std::string const& stage() const noexcept {
      return stage_;
    }
    std::string const& cause() const noexcept {
      return cause_;
    }

   private:
    std::string stage_;
    std::string cause_;
  };

  class ParameterError : public Error {
   public:
    using Error::Error;
  };

}  // namespace qonsager
