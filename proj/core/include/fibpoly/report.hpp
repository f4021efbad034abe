#pragma once

#include <string>

#include <json.hpp>

namespace fibpoly {

/// Verdict plus structured details (witnesses, bounds).  Verdicts are
/// "pass", "fail" or "exhausted"; nlohmann::json serializes with sorted
/// keys, which keeps reports byte-stable for a fixed seed.
struct Report {
  std::string verdict = "pass";
  nlohmann::json details = nlohmann::json::object();

  bool ok() const { return verdict == "pass"; }

  static Report pass(nlohmann::json details = nlohmann::json::object()) {
    return {"pass", std::move(details)};
  }
  static Report fail(std::string what, nlohmann::json witness = nlohmann::json::object()) {
    Report r;
    r.verdict = "fail";
    r.details["what"] = std::move(what);
    r.details["witness"] = std::move(witness);
    return r;
  }
  static Report exhausted(std::string what, nlohmann::json details = nlohmann::json::object()) {
    Report r;
    r.verdict = "exhausted";
    r.details = std::move(details);
    r.details["what"] = std::move(what);
    return r;
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"verdict", verdict}, {"details", details}};
  }
};

}  // namespace fibpoly
