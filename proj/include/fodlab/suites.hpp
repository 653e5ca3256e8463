#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fodlab/gen.hpp"
#include "fodlab/monoid.hpp"
#include "fodlab/report.hpp"

namespace fodlab {

/// f : A -> B |-> delta f : A x A -> B.
using ForwardOp = std::function<PolyMap(const PolyMap&)>;
/// f : A -> B |-> rho f : A x B -> A.
using ReverseOp = std::function<PolyMap(const PolyMap&)>;

/// Chosen tangent object, fibre monoid and derivative for a generalised CDC.
struct GcdcInstance {
  std::function<std::size_t(std::size_t)> tangent_dim;      // A |-> lambda A
  std::function<CommutativeMonoid(std::size_t)> monoid;     // monoid on lambda A
  std::function<PolyMap(const PolyMap&)> lambda;            // A x lambda A -> lambda B
};

/// lambda A = A with the coordinatewise monoid and the Jacobian action.
GcdcInstance default_gcdc_instance();

AxiomReport cdc_axiom_suite(const GenParams& params, std::size_t trials,
                            const ForwardOp& delta = jacobian_action);
AxiomReport rdc_axiom_suite(const GenParams& params, std::size_t trials,
                            const ReverseOp& rho = jacobian_transpose_action);
/// Throws InstanceError if a chosen monoid fails its laws.
AxiomReport gcdc_axiom_suite(const GenParams& params, std::size_t trials,
                             const GcdcInstance& instance = default_gcdc_instance());
AxiomReport tangent_axiom_suite(const GenParams& params, std::size_t trials);
AxiomReport dT_axiom_suite(const GenParams& params, std::size_t trials);
AxiomReport rdc2cdc_suite(const GenParams& params, std::size_t trials);
AxiomReport oracle_suite(const GenParams& params, std::size_t trials);

/// cdc, rdc, gcdc, tangent, dT, rdc2cdc, oracle.
const std::vector<std::string>& suite_ids();
std::size_t default_trials(const std::string& suite);
/// Throws UnknownSuiteError.
AxiomReport run_suite(const std::string& suite, const GenParams& params,
                      std::optional<std::size_t> trials = std::nullopt);
/// Like run_suite, and "all" runs every suite in order.
std::vector<AxiomReport> run(const std::string& suite, const GenParams& params,
                             std::optional<std::size_t> trials = std::nullopt);

}  // namespace fodlab
