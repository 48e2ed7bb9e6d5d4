#pragma once

// Named constructions and the data-driven verification catalog behind `paper-verify`.

#include <optional>
#include <string>
#include <vector>

#include "bicross/io.hpp"

namespace bicross {

/// {"name":"l","n":2}, {"name":"Lalpha","alpha":"3"}, {"name":"l_a","a":["1"]}, …
/// Throws BadParameter for an unknown name.
LieAlgebra named_algebra(const json& spec, FieldDescriptor field);
/// {"name":"canonical-L","n":1}, {"name":"canonical-m","n":1}, {"name":"h5"}
MatchedPair named_pair(const json& spec, FieldDescriptor field);
/// Names accepted by named_algebra, for help output.
std::vector<std::string> named_algebra_names();

struct Scenario {
  std::string id;
  std::string description;
  std::string source;               // "published", "immediate" or "computed"
  std::string kind;
  std::vector<std::string> fields;  // "Q" or a prime, e.g. "5"
  json params;
  json expected;                    // keyed by field
};

struct ScenarioOutcome {
  std::string field;
  bool passed = false;
  json expected;
  json actual;
  double seconds = 0;
};

struct ScenarioResult {
  std::string id;
  std::vector<ScenarioOutcome> outcomes;

  [[nodiscard]] bool passed() const;
};

/// The bundled catalog (path fixed at build time).
std::string default_scenario_path();
std::vector<Scenario> load_scenarios(const std::string& path);
const Scenario& find_scenario(const std::vector<Scenario>& catalog, std::string_view id);  // UnknownScenario

/// Runs every listed field, or only GF(p) when `p` is given (BadParameter if the scenario has no
/// expectation there). An outcome passes when every expected key equals the computed value.
ScenarioResult run_scenario(const Scenario& s, std::optional<std::uint64_t> p = std::nullopt);

}  // namespace bicross
