#pragma once

// Check records, suite reports and their JSON / text serializations.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qonsager {

  struct CheckRecord {
    std::string name;    // e.g. "hexagon/Tconj/E1"
    std::string anchor;  // source statement, e.g. "Lemma Tconj"
    bool        passed = false;
    std::string detail;  // nonempty iff !passed
    double      elapsed_ms = 0;
  };

  // A check body returns std::nullopt on success, or the failure detail.
  using CheckBody = std::function<std::optional<std::string>()>;

  struct Report {
    std::string                                      suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckRecord>                         checks;

    // Runs `body`, timing it; exceptions become failures.
    void check(std::string name, std::string anchor, CheckBody const& body);
    void expect(std::string name, std::string anchor, bool ok,
                std::string detail);
    void merge(Report const& other);
    void sort();

    std::size_t passed() const;
    std::size_t failed() const;
    bool        ok() const {
      return failed() == 0;
    }
  };

  struct ReportSummary {
    std::string suite;
    std::size_t total  = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
  };

  // Fields: suite, config, checks[] (sorted by name), summary; wall-clock
  // data lives under a single top-level "timestamp" field.
  std::string emit_json(Report const& r, bool with_timestamp = true);
  std::string emit_text(Report const& r);
  Report      parse_report(std::string const& json);
  ReportSummary summarize(Report const& r);

}  // namespace qonsager
