#pragma once

#include "fodlab/polymap.hpp"

namespace fodlab {

// Deliberately wrong derivative operators, used to show the suites can fail.

/// J_f(0) v: the Jacobian frozen at the origin, so the chain rule loses its
/// dependence on the inner map's value.
PolyMap corrupted_delta(const PolyMap& f);

/// J_f(a) used where J_f(a)^T belongs, on the rho shape A x B -> A. Entries
/// outside the n x m Jacobian are taken as zero.
PolyMap corrupted_rho(const PolyMap& f);

}  // namespace fodlab
