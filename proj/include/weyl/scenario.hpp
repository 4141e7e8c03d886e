#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weyl/delta_module.hpp"
#include "weyl/groebner.hpp"
#include "weyl/lie.hpp"
#include "weyl/report.hpp"

namespace weyl {

using Bindings = std::map<std::string, long>;

/// Replaces every "{expr}" in `text` by the integer value of expr under
/// `bindings`. expr supports + - *, parentheses, integers, parameter names
/// and max(a, b). Negative results are emitted parenthesized.
std::string substitute_template(const std::string& text, const Bindings& bindings);

long evaluate_integer(const std::string& expr, const Bindings& bindings);

struct Scenario {
  std::string name;
  std::string origin;
  std::size_t ambient = 0;
  TermOrder order;
  ordered_json doc;
};

std::vector<std::string> builtin_scenario_names();

/// Builtin name (e.g. "paper-n2") or a path to a JSON file. Validates names,
/// parameter domains and every expression at every sweep value.
Scenario load_scenario(const std::string& name_or_path);
Scenario parse_scenario(const std::string& text, const std::string& origin);

// Resolves named objects of a scenario under parameter bindings, caching
// ideals (and so their Groebner bases) per instantiation.
class ScenarioContext {
 public:
  explicit ScenarioContext(const Scenario& scenario);

  std::size_t ambient() const { return scenario_->ambient; }
  const Scenario& scenario() const { return *scenario_; }

  WeylElement expression(const std::string& text, const Bindings& b) const;

  /// "name" or "name(p=expr, ...)".
  const WeylIdeal& ideal(const std::string& ref, const Bindings& b);
  std::vector<WeylElement> ideal_generators(const std::string& ref, const Bindings& b) const;
  DeltaSection section(const ordered_json& spec, const Bindings& b) const;
  LieSubalgebra algebra(const std::string& name) const;
  Character character(const std::string& ref, const Bindings& b) const;
  OrbitChart chart(const std::string& ref, const Bindings& b) const;

 private:
  std::pair<std::string, Bindings> parse_ref(const std::string& ref, const Bindings& b) const;

  const Scenario* scenario_;
  std::map<std::string, std::unique_ptr<WeylIdeal>> ideal_cache_;
};

Report run_scenario(const Scenario& scenario);

}  // namespace weyl
