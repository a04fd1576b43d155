#pragma once

// Uniform run summary for the command line: counts, failures with their
// index tuples and expanded words, and free-form detail fields.
//
// The JSON rendering leaves out wall time so identical runs give identical
// bytes; the text rendering prints it.

#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "syntax.hpp"
#include "verifier.hpp"

namespace bandgroup {

  struct FailureRecord {
    std::string      label;
    std::vector<int> indices;
    std::string      lhs;
    std::string      rhs;
    std::string      detail;
  };

  struct RunReport {
    std::string                tag;
    std::size_t                instances = 0;
    std::size_t                passed    = 0;
    std::vector<FailureRecord> failures;
    Json                       details = Json::object();
    double                     wall_seconds = 0.0;

    bool ok() const noexcept {
      return failures.empty() && passed == instances;
    }

    void count(bool pass, FailureRecord failure = {}) {
      ++instances;
      if (pass) {
        ++passed;
      } else {
        failures.push_back(std::move(failure));
      }
    }

    void add(VerifyReport const& v) {
      for (auto const& [label, c] : v.families) {
        instances += c.instances;
        passed += c.passed;
        Json& fam = details["families"][label];
        if (fam.is_null()) {
          fam = Json{{"instances", 0}, {"passed", 0}};
        }
        fam["instances"] = fam["instances"].get<std::size_t>() + c.instances;
        fam["passed"]    = fam["passed"].get<std::size_t>() + c.passed;
      }
      for (auto const& f : v.failures) {
        failures.push_back({f.relation.label, f.relation.indices,
                            to_string(f.relation.lhs) + "  [" + to_string(f.lhs) + "]",
                            to_string(f.relation.rhs) + "  [" + to_string(f.rhs) + "]",
                            ""});
      }
    }

    Json to_json() const {
      Json fs = Json::array();
      for (auto const& f : failures) {
        Json x{{"label", f.label}, {"indices", f.indices}};
        if (!f.lhs.empty() || !f.rhs.empty()) {
          x["lhs"] = f.lhs;
          x["rhs"] = f.rhs;
        }
        if (!f.detail.empty()) {
          x["detail"] = f.detail;
        }
        fs.push_back(std::move(x));
      }
      return Json{{"tag", tag},
                  {"ok", ok()},
                  {"instances", instances},
                  {"passed", passed},
                  {"failures", fs},
                  {"details", details}};
    }

    std::string to_text() const {
      std::ostringstream out;
      out << tag << ": " << passed << "/" << instances << " passed"
          << (ok() ? "" : "  FAILED");
      out.setf(std::ios::fixed);
      out.precision(3);
      out << "  (" << wall_seconds << " s)\n";
      if (details.contains("families")) {
        for (auto const& [label, c] : details["families"].items()) {
          out << "  " << label << ": " << c["passed"].get<std::size_t>() << "/"
              << c["instances"].get<std::size_t>() << '\n';
        }
      }
      for (auto const& [key, v] : details.items()) {
        if (key != "families") {
          out << "  " << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << '\n';
        }
      }
      for (auto const& f : failures) {
        out << "  FAIL " << f.label;
        if (!f.indices.empty()) {
          out << " (";
          for (std::size_t q = 0; q < f.indices.size(); ++q) {
            out << (q ? "," : "") << f.indices[q];
          }
          out << ")";
        }
        out << '\n';
        if (!f.lhs.empty() || !f.rhs.empty()) {
          out << "    lhs: " << f.lhs << "\n    rhs: " << f.rhs << '\n';
        }
        if (!f.detail.empty()) {
          out << "    " << f.detail << '\n';
        }
      }
      return out.str();
    }
  };

}  // namespace bandgroup
