// qonsager-verify: run verification suites and emit a report.
//
// Exit status: 0 when every check passes, 1 on any check failure, 2 on
// usage or configuration errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qonsager/suites.hpp"

namespace {

  int usage_error(std::string const& what) {
    std::cerr << "qonsager-verify: " << what << "\n";
    return 2;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the S3-symmetric q-Onsager algebra"};

  qonsager::SuiteConfig cfg;
  std::string           mode   = "exact";
  std::string           params = "symbolic";
  std::string           format = "text";
  std::string           out;
  std::uint64_t         seed   = 0;

  app.add_option("--suite", cfg.suite, "Suite to run")
      ->check(CLI::IsMember(qonsager::suite_names()))
      ->capture_default_str();
  app.add_option("--mode", mode, "Equality mode")
      ->check(CLI::IsMember({"exact", "prob"}))
      ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "Seed for probabilistic checks and specializations");
  app.add_option("--trials", cfg.trials, "Evaluation points per identity in prob mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--params", params, "'symbolic' or a parameter file")->capture_default_str();
  app.add_option("--word-length", cfg.word_length, "Maximal word length for the evidence suite")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  cfg.probabilistic = mode == "prob";
  if (*seed_opt) {
    cfg.seed = seed;
  }
  if (params != "symbolic") {
    cfg.params_file = params;
  }

  qonsager::Report report;
  try {
    report = qonsager::run_suite(cfg);
  } catch (qonsager::UsageError const& e) {
    return usage_error(e.what());
  } catch (qonsager::ParameterError const& e) {
    return usage_error(e.what());
  } catch (qonsager::ParseError const& e) {
    return usage_error(e.what());
  }

  std::string const text
      = format == "json" ? qonsager::emit_json(report) : qonsager::emit_text(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      return usage_error("cannot write '" + out + "'");
    }
    f << text;
  }
  return report.ok() ? 0 : 1;
}
