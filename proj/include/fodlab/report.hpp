#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fodlab {

struct Counterexample {
  std::vector<std::string> inputs;  // replayable literals
  std::string lhs;
  std::string rhs;
};

struct LawRecord {
  std::string suite;
  std::string law;
  std::string paper_anchor;
  std::size_t trials = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // present iff !passed
};

struct AxiomReport {
  std::string suite;
  std::vector<LawRecord> laws;
  double wall_time_ms = 0;

  bool passed() const;
};

nlohmann::json to_json(const LawRecord& law);
/// wall_time_ms is emitted only when include_timing is set.
nlohmann::json to_json(const AxiomReport& report, bool include_timing = true);
std::string to_text(const AxiomReport& report);

}  // namespace fodlab
