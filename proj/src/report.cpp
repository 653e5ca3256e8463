#include "fodlab/report.hpp"

#include <sstream>

namespace fodlab {

bool AxiomReport::passed() const {
  for (const LawRecord& l : laws) {
    if (!l.passed) return false;
  }
  return true;
}

nlohmann::json to_json(const LawRecord& law) {
  nlohmann::json j{{"suite", law.suite},   {"law", law.law},       {"paper_anchor", law.paper_anchor},
                   {"trials", law.trials}, {"passed", law.passed}};
  if (law.counterexample) {
    j["counterexample"] = {{"inputs", law.counterexample->inputs},
                           {"lhs", law.counterexample->lhs},
                           {"rhs", law.counterexample->rhs}};
  }
  return j;
}

nlohmann::json to_json(const AxiomReport& report, bool include_timing) {
  nlohmann::json laws = nlohmann::json::array();
  for (const LawRecord& l : report.laws) laws.push_back(to_json(l));
  nlohmann::json j{{"suite", report.suite}, {"laws", laws}, {"passed", report.passed()}};
  if (include_timing) j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

std::string to_text(const AxiomReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << (report.passed() ? ": passed" : ": FAILED") << "\n";
  for (const LawRecord& l : report.laws) {
    out << "  " << (l.passed ? "ok   " : "FAIL ") << l.law << " (" << l.paper_anchor << "), "
        << l.trials << " trials\n";
    if (l.counterexample) {
      for (const std::string& in : l.counterexample->inputs) out << "      input " << in << "\n";
      out << "      lhs   " << l.counterexample->lhs << "\n";
      out << "      rhs   " << l.counterexample->rhs << "\n";
    }
  }
  return out.str();
}

}  // namespace fodlab
