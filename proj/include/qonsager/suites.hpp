#pragma once

// Named verification suites shared by the CLI, the acceptance binary and
// the Python module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qonsager/errors.hpp"
#include "qonsager/hexagon.hpp"
#include "qonsager/report.hpp"

namespace qonsager {

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct SuiteConfig {
    std::string                  suite = "all";
    bool                         probabilistic = false;
    std::optional<std::uint64_t> seed;
    unsigned                     trials = 8;
    std::optional<std::string>   params_file;  // nullopt: symbolic
    int                          word_length = 3;

    // Seed for specializations when none was given.
    std::uint64_t effective_seed() const {
      return seed.value_or(1);
    }
  };

  std::vector<std::string> const& suite_names();

  // Throws UsageError.
  void validate(SuiteConfig const& config);

  // Runs the suite; check failures are recorded, never thrown.  Throws
  // UsageError for invalid configurations and ParameterError / ParseError
  // for unreadable parameter files.
  Report run_suite(SuiteConfig const& config);

  // Individual building blocks, exposed for the acceptance binary.
  Report verify_commutation(ExampleBundle const& b);
  Report verify_free_generation(ExampleBundle const& b, int word_length);
  Report verify_tensor(ExampleBundle const& b, EqualityMode const& mode);
  Report verify_formula_identities(int max_d);
  Report verify_robustness(ExampleBundle const& b);
  Report verify_diagram_identities();

}  // namespace qonsager
