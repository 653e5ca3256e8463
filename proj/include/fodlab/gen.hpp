#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fodlab/linearity.hpp"

namespace fodlab {

struct GenParams {
  std::size_t max_dim = 4;
  std::uint32_t max_degree = 4;
  std::size_t max_terms = 6;
  long coeff_bound = 9;
  std::uint64_t seed = 0;
};

/// Deterministic sampler; the stream depends only on (params, trial, salt).
class Generator {
 public:
  Generator(const GenParams& params, std::uint64_t trial, std::uint64_t salt = 0);

  const GenParams& params() const { return params_; }

  /// Uniform in [lo, max(lo, max_dim)].
  std::size_t dim(std::size_t lo = 1);
  std::size_t below(std::size_t n);
  /// Numerator in [-bound, bound], denominator in [1, bound].
  Rational rational();
  Rational nonzero_rational();
  Vector vector(std::size_t n);
  double uniform(double lo, double hi);

  Poly poly(std::size_t arity);
  /// Zero maps, coordinate selections and constant maps each appear with probability 1/16.
  PolyMap map(std::size_t dom, std::size_t cod);
  /// Maps base + fiber -> cod of fibre degree exactly 1 (additive in the fiber block).
  PolyMap fiber_linear_map(std::size_t base_dim, std::size_t fiber_dim, std::size_t cod);
  /// Random invertible matrix with small entries.
  Matrix invertible_matrix(std::size_t n);
  /// (b, v) |-> (b, M v + c(b)); additive iff `additive`.
  Trivialization trivialization(std::size_t n, bool additive);

 private:
  GenParams params_;
  std::mt19937_64 rng_;
};

PolyMap gen_polymap(const GenParams& params, std::uint64_t trial, std::size_t dom, std::size_t cod);

/// Infinity-norm of (f(p + h v) - f(p)) / h - delta f(p, v), in double precision.
double fd_error(const PolyMap& f, const std::vector<double>& point, const std::vector<double>& direction,
                double h);
bool fd_check(const PolyMap& f, const std::vector<double>& point, const std::vector<double>& direction,
              double h, double tol);

}  // namespace fodlab
