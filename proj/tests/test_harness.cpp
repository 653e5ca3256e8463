#include <doctest.h>

#include <cmath>

#include "fodlab/errors.hpp"
#include "fodlab/mutants.hpp"
#include "fodlab/suites.hpp"
#include "support.hpp"

using namespace fodlab;
using namespace fodlab::test;

TEST_CASE("generation is a function of params and trial") {
  GenParams p;
  p.seed = 7;
  for (std::uint64_t t = 0; t < 20; ++t) CHECK(gen_polymap(p, t, 3, 2) == gen_polymap(p, t, 3, 2));
  CHECK(gen_polymap(p, 1, 3, 2) != gen_polymap(p, 2, 3, 2));
  GenParams q = p;
  q.seed = 8;
  bool differs = false;
  for (std::uint64_t t = 0; t < 20; ++t) differs = differs || gen_polymap(p, t, 3, 2) != gen_polymap(q, t, 3, 2);
  CHECK(differs);
}

TEST_CASE("generation respects bounds") {
  GenParams p;
  p.max_degree = 0;
  for (std::uint64_t t = 0; t < 200; ++t) CHECK(gen_polymap(p, t, 3, 2).degree() <= 0);
  p = GenParams{};
  p.max_degree = 3;
  p.max_terms = 1;  // a single sampled term, so coefficients are never merged
  p.coeff_bound = 4;
  for (std::uint64_t t = 0; t < 500; ++t) {
    const PolyMap f = gen_polymap(p, t, 4, 3);
    CHECK(f.degree() <= 3);
    for (const Poly& c : f.components()) {
      CHECK(c.terms().size() <= 1);
      for (const Term& term : c.terms()) {
        CHECK(abs(term.coefficient.get_num()) <= 4);
        CHECK(term.coefficient.get_den() <= 4);
      }
    }
  }
  Generator g(GenParams{}, 0);
  for (int i = 0; i < 200; ++i) {
    const Rational q = g.rational();
    CHECK(abs(q.get_num()) <= 9);
    CHECK(q.get_den() <= 9);
    const std::size_t d = g.dim();
    CHECK(d >= 1);
    CHECK(d <= 4);
  }
}

TEST_CASE("degenerate shapes appear") {
  GenParams p;
  bool zero = false, selection = false, constant = false;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const PolyMap f = gen_polymap(p, t, 2, 2);
    zero = zero || f == map_zero(2, 2);
    bool all_vars = true;
    for (const Poly& c : f.components()) all_vars = all_vars && c.as_variable() >= 0;
    selection = selection || all_vars;
    constant = constant || (f.degree() == 0);
  }
  CHECK(zero);
  CHECK(selection);
  CHECK(constant);
}

TEST_CASE("finite differences") {
  const PolyMap sq = M("[x0^2] : 1 -> 1");
  // Forward-difference error of x^2 at p = 1, v = 1 is h.
  CHECK(std::abs(fd_error(sq, {1.0}, {1.0}, 1e-4) - 1e-4) < 1e-9);
  CHECK(fd_check(sq, {1.0}, {1.0}, 1e-4, 1e-3));
  CHECK_FALSE(fd_check(sq, {1.0}, {1.0}, 1e-2, 1e-3));
  CHECK(fd_error(M("[3*x0 - x1 + 2; x1] : 2 -> 2"), {0.5, -1.0}, {1.0, 0.25}, 0.125) == 0.0);
  // Dyadic steps keep every operation exact, so the ratio is exactly 1/2.
  const double h = std::ldexp(1.0, -13);
  CHECK(fd_error(sq, {1.0}, {1.0}, h / 2) / fd_error(sq, {1.0}, {1.0}, h) == 0.5);
  CHECK_THROWS_AS(fd_error(sq, {1.0, 2.0}, {1.0}, h), DimensionError);
}

TEST_CASE("suite dispatch") {
  const AxiomReport cdc = run_suite("cdc", GenParams{});
  CHECK(cdc.laws.size() == 5);
  CHECK(cdc.passed());
  for (const LawRecord& l : cdc.laws) CHECK(l.trials == 200);
  const AxiomReport r2c = run_suite("rdc2cdc", GenParams{}, 200);
  CHECK(r2c.laws.front().law == "pipeline agreement");
  CHECK(r2c.laws.front().passed);
  CHECK(r2c.laws.front().trials == 200);
  CHECK_THROWS_AS(run_suite("bogus", GenParams{}), UnknownSuiteError);
  CHECK_THROWS_AS(run("bogus", GenParams{}), UnknownSuiteError);
  CHECK(run("all", GenParams{}, 2).size() == suite_ids().size());
  CHECK(default_trials("tangent") == 100);
  CHECK(default_trials("oracle") == 200);
}

TEST_CASE("reports") {
  GenParams p;
  const AxiomReport bad = cdc_axiom_suite(p, 30, corrupted_delta);
  for (const LawRecord& l : bad.laws) CHECK(l.counterexample.has_value() == !l.passed);
  const nlohmann::json j = to_json(bad, false);
  CHECK_FALSE(j.contains("wall_time_ms"));
  CHECK(to_json(bad).contains("wall_time_ms"));
  CHECK(j["passed"] == false);
  for (const auto& law : j["laws"]) {
    CHECK(law.contains("paper_anchor"));
    CHECK(law.contains("counterexample") == !law["passed"].get<bool>());
    if (law.contains("counterexample")) {
      // Inputs and sides are map literals the parser accepts.
      for (const auto& in : law["counterexample"]["inputs"]) CHECK_NOTHROW(parse_map(in.get<std::string>()));
      CHECK_NOTHROW(parse_map(law["counterexample"]["lhs"].get<std::string>()));
      CHECK_NOTHROW(parse_map(law["counterexample"]["rhs"].get<std::string>()));
    }
  }
  CHECK(to_text(bad).find("FAIL CDC.5") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  GenParams p;
  p.seed = 99;
  for (const std::string& id : suite_ids()) {
    CHECK(to_json(run_suite(id, p, 5), false).dump() == to_json(run_suite(id, p, 5), false).dump());
  }
}

TEST_CASE("gcdc instances are validated") {
  GcdcInstance inst = default_gcdc_instance();
  CHECK(gcdc_axiom_suite(GenParams{}, 20, inst).passed());
  inst.monoid = [](std::size_t a) {
    CommutativeMonoid m = standard_monoid(a);
    m.plus = projection({a, a}, 0);
    return m;
  };
  CHECK_THROWS_AS(gcdc_axiom_suite(GenParams{}, 20, inst), InstanceError);
}
