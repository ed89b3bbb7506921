#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace enriques {

enum class CheckStatus { Pass, Fail, Inconclusive };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct Report {
  static constexpr int kSchema = 1;

  std::string command;
  std::vector<Check> checks;
  nlohmann::ordered_json artifacts = nlohmann::ordered_json::object();
  std::vector<std::string> lines;  // human-readable body

  void check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  }

  bool ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
  }
  int exit_code() const { return ok() ? 0 : 1; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    j["artifacts"] = artifacts;
    return j;
  }

  std::string to_text() const {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    for (const auto& c : checks) {
      s += "[" + to_string(c.status) + "] " + c.name;
      if (!c.detail.empty()) s += ": " + c.detail;
      s += "\n";
    }
    return s;
  }
};

}  // namespace enriques
