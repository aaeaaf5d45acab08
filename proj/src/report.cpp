#include "qonsager/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "qonsager/errors.hpp"

namespace qonsager {

  using json = nlohmann::ordered_json;

  void Report::check(std::string name, std::string anchor, CheckBody const& body) {
    auto        start  = std::chrono::steady_clock::now();
    bool        passed = false;
    std::string detail;
    try {
      auto res = body();
      passed   = !res;
      if (res) {
        detail = res->empty() ? "failed" : *res;
      }
    } catch (std::exception const& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::chrono::duration<double, std::milli> dt
        = std::chrono::steady_clock::now() - start;
    checks.push_back(
        {std::move(name), std::move(anchor), passed, std::move(detail), dt.count()});
  }

  void Report::expect(std::string name, std::string anchor, bool ok,
                      std::string detail) {
    checks.push_back({std::move(name), std::move(anchor), ok,
                      ok ? std::string() : (detail.empty() ? "failed" : detail),
                      0});
  }

  void Report::merge(Report const& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    for (auto const& kv : other.config) {
      if (std::none_of(config.begin(), config.end(),
                       [&](auto const& c) { return c.first == kv.first; })) {
        config.push_back(kv);
      }
    }
  }

  void Report::sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](CheckRecord const& x, CheckRecord const& y) {
                       return x.name < y.name;
                     });
  }

  std::size_t Report::passed() const {
    return std::count_if(checks.begin(), checks.end(),
                         [](auto const& c) { return c.passed; });
  }

  std::size_t Report::failed() const {
    return checks.size() - passed();
  }

  ReportSummary summarize(Report const& r) {
    return {r.suite, r.checks.size(), r.passed(), r.failed()};
  }

  std::string emit_json(Report const& r, bool with_timestamp) {
    Report sorted = r;
    sorted.sort();
    json j;
    j["suite"]   = sorted.suite;
    json config  = json::object();
    for (auto const& [k, v] : sorted.config) {
      config[k] = v;
    }
    j["config"]  = config;
    json checks  = json::array();
    json elapsed = json::object();
    for (auto const& c : sorted.checks) {
      json e;
      e["name"]   = c.name;
      e["anchor"] = c.anchor;
      e["status"] = c.passed ? "pass" : "fail";
      if (!c.passed) {
        e["detail"] = c.detail;
      }
      checks.push_back(e);
      elapsed[c.name] = c.elapsed_ms;
    }
    j["checks"]  = checks;
    j["summary"] = {{"total", sorted.checks.size()},
                    {"passed", sorted.passed()},
                    {"failed", sorted.failed()}};
    if (with_timestamp) {
      std::time_t now = std::time(nullptr);
      char        buf[32];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      j["timestamp"] = {{"utc", buf}, {"elapsed_ms", elapsed}};
    }
    return j.dump(2) + "\n";
  }

  std::string emit_text(Report const& r) {
    Report sorted = r;
    sorted.sort();
    std::ostringstream out;
    out << "suite " << sorted.suite << "\n";
    for (auto const& [k, v] : sorted.config) {
      out << "  " << k << " = " << v << "\n";
    }
    for (auto const& c : sorted.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  [" << c.anchor
          << "]";
      if (!c.passed) {
        out << "  " << c.detail;
      }
      out << "\n";
    }
    out << sorted.passed() << "/" << sorted.checks.size() << " passed, "
        << sorted.failed() << " failed\n";
    return out.str();
  }

  Report parse_report(std::string const& text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::exception const& e) {
      throw ParseError(std::string("report JSON: ") + e.what());
    }
    Report r;
    r.suite = j.at("suite").get<std::string>();
    for (auto const& [k, v] : j.at("config").items()) {
      r.config.emplace_back(k, v.get<std::string>());
    }
    for (auto const& c : j.at("checks")) {
      CheckRecord rec;
      rec.name   = c.at("name").get<std::string>();
      rec.anchor = c.at("anchor").get<std::string>();
      rec.passed = c.at("status").get<std::string>() == "pass";
      rec.detail = c.value("detail", std::string());
      r.checks.push_back(std::move(rec));
    }
    return r;
  }

}  // namespace qonsager
