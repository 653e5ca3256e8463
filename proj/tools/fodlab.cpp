// fodlab: derivative sections of polynomial maps and the axiom suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fodlab/errors.hpp"
#include "fodlab/lens.hpp"
#include "fodlab/linearity.hpp"
#include "fodlab/parse.hpp"
#include "fodlab/rdc2cdc.hpp"
#include "fodlab/suites.hpp"

using namespace fodlab;

namespace {

Trivialization triv_option(const std::string& text, std::size_t dim, const char* flag) {
  if (text.empty()) return Trivialization::identity(dim);
  Trivialization t = Trivialization::from_matrix(parse_matrix(text));
  if (t.object != dim) {
    throw DimensionError(std::string(flag) + " has size " + std::to_string(t.object) + ", expected " +
                         std::to_string(dim));
  }
  return t;
}

int cmd_fwd(const std::string& map) {
  const SimpleMor d = forward_section_D(parse_map(map));
  std::cout << "base " << to_literal(d.base()) << "\n";
  std::cout << "fib  " << to_literal(d.fib()) << "\n";
  return 0;
}

int cmd_rev(const std::string& map) {
  const LensMor r = reverse_section_R(parse_map(map));
  std::cout << "base " << to_literal(r.base()) << "\n";
  std::cout << "fib  " << to_literal(r.fib()) << "\n";
  return 0;
}

int cmd_rdc2cdc(const std::string& map, bool verify) {
  const PolyMap f = parse_map(map);
  const SimpleMor via_rdc = rdc_to_cdc(f);
  std::cout << "rdc2cdc " << to_literal(via_rdc.fib()) << "\n";
  if (!verify) return 0;
  const SimpleMor direct = forward_section_D(f);
  const bool equal = via_rdc == direct;
  std::cout << "direct  " << to_literal(direct.fib()) << "\n";
  std::cout << (equal ? "equal" : "NOT equal") << "\n";
  return equal ? 0 : 1;
}

int cmd_linearity(const std::string& map, const std::string& triv_a, const std::string& triv_b) {
  const PolyMap f = parse_map(map);
  const Trivialization ta = triv_option(triv_a, f.dom(), "--triv-a");
  const Trivialization tb = triv_option(triv_b, f.cod(), "--triv-b");
  const LinearityCheck c = linearity_check(f, ta, tb);
  if (c.full != c.reduced) {
    std::cerr << "error: full and reduced linearity squares disagree\n";
    return 2;
  }
  if (c.full) {
    std::cout << "linear\n";
    return 0;
  }
  std::cout << "not linear\n";
  std::cout << "  pi_2 o tB o Tf  = " << to_literal(c.reduced_lhs) << "\n";
  std::cout << "  f o pi_2 o tA   = " << to_literal(c.reduced_rhs) << "\n";
  return 1;
}

int cmd_check(const std::string& suite, std::optional<std::size_t> trials, GenParams params,
              const std::string& format) {
  if (const char* env = std::getenv("FODLAB_SEED")) params.seed = std::stoull(env);
  const std::vector<AxiomReport> reports = run(suite, params, trials);
  bool passed = true;
  for (const AxiomReport& r : reports) passed = passed && r.passed();
  if (format == "json") {
    nlohmann::json out{{"reports", nlohmann::json::array()}, {"passed", passed}};
    for (const AxiomReport& r : reports) out["reports"].push_back(to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const AxiomReport& r : reports) std::cout << to_text(r);
    std::cout << (passed ? "all laws passed" : "FAILURES") << "\n";
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivative sections of polynomial maps and their axiom suites"};
  app.require_subcommand(1);

  std::string map;
  auto* fwd = app.add_subcommand("fwd", "Forward section D f = (f, J(a) v)");
  fwd->add_option("--map", map, "Map literal, e.g. \"[x0^2] : 1 -> 1\"")->required();

  auto* rev = app.add_subcommand("rev", "Reverse section R f = (f, J(a)^T w)");
  rev->add_option("--map", map, "Map literal")->required();

  bool verify = false;
  auto* r2c = app.add_subcommand("rdc2cdc", "Forward derivative recovered from the reverse one");
  r2c->add_option("--map", map, "Map literal")->required();
  r2c->add_flag("--verify", verify, "Compare with the direct Jacobian");

  std::string triv_a, triv_b;
  auto* lin = app.add_subcommand("linearity", "Linearity with respect to trivializations");
  lin->add_option("--map", map, "Map literal")->required();
  lin->add_option("--triv-a", triv_a, "Matrix M of (b, v) |-> (b, M v) on the source");
  lin->add_option("--triv-b", triv_b, "Matrix on the target");

  std::string suite;
  std::optional<std::size_t> trials;
  GenParams params;
  std::string format = "json";
  auto* check = app.add_subcommand("check", "Run axiom suites");
  std::vector<std::string> choices = suite_ids();
  choices.push_back("all");
  check->add_option("--suite", suite, "Suite id")->required()->check(CLI::IsMember(choices));
  check->add_option("--trials", trials, "Trials per law (suite default if omitted)");
  check->add_option("--seed", params.seed, "Seed; FODLAB_SEED overrides it")->capture_default_str();
  check->add_option("--max-dim", params.max_dim)->capture_default_str()->check(CLI::Range(1, 16));
  check->add_option("--max-degree", params.max_degree)->capture_default_str();
  check->add_option("--max-terms", params.max_terms)->capture_default_str()->check(CLI::Range(1, 64));
  check->add_option("--coeff-bound", params.coeff_bound)->capture_default_str()->check(CLI::Range(1, 1000000));
  check->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fwd) return cmd_fwd(map);
    if (*rev) return cmd_rev(map);
    if (*r2c) return cmd_rdc2cdc(map, verify);
    if (*lin) return cmd_linearity(map, triv_a, triv_b);
    return cmd_check(suite, trials, params, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
