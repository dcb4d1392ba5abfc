#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "versalkit/io.hpp"

namespace vk::cli {

inline constexpr const char* kToolName = "versalkit";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Kind { ModelCheck, ChBuild, Tangent, DetValidate, Hs, Versal, Cycles, Weights, Ledger };

std::string kind_name(Kind k);
const std::vector<std::string>& kind_names();

struct Scenario {
  std::string id;
  Kind kind = Kind::ModelCheck;
  io::TextDoc doc;                            // the scenario file itself, data sections included
  std::map<std::string, std::string> refs;     // model / ring / pair -> resolved path
  std::map<std::string, std::string> options;  // [options] plus command-line flags
};

// validated scenario; throws io::ParseError on syntax errors, unknown kinds,
// dangling references and referenced files that do not parse
Scenario parse_scenario(const std::string& path);
Scenario scenario_from_doc(const io::TextDoc& doc, const std::string& id);
// checks the references and options required by the kind and parses referenced files
void validate_scenario(const Scenario& s);

struct Report {
  std::string id;
  std::string kind;
  bool pass = false;
  nlohmann::json payload;
  std::string error;  // set when the scenario could not be evaluated
  double seconds = 0;
};

nlohmann::json to_json(const Report& r, bool timing = false);
Report report_from_json(const nlohmann::json& j);

// throws std::exception subclasses on invalid input; payload exceptions are
// not caught here
Report run(const Scenario& s);

struct SuiteReport {
  std::string directory;
  std::vector<Report> cases;  // ordered by scenario id
  bool vacuous = false;
  int failures = 0;
  bool pass() const { return failures == 0 && !vacuous; }
};
// every *.ini file in the directory; a scenario that fails to parse or throws counts as a failure
SuiteReport regression_suite(const std::string& directory);
nlohmann::json to_json(const SuiteReport& r, bool timing = false);

// 0 pass, 1 verdict fail, 2 usage or parse error
int exit_code(const Report& r);

}  // namespace vk::cli
